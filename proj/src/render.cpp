#include "ugl/render.hpp"

#include <sstream>
#include <stdexcept>

namespace ugl {

namespace {

// "- " / " + " separator plus the bare coefficient; `has_body` controls the
// trailing '*' and whether a unit coefficient is suppressed
std::string term_prefix(const Rational& c, bool first, bool has_body) {
  Rational a = c.sign() < 0 ? -c : c;
  std::string s = c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  if (!has_body) return s + a.str();
  if (!a.is_one()) s += a.str() + "*";
  return s;
}

}  // namespace

std::string render_text(const EnvElement& x) {
  if (x.is_zero()) return "0";
  const Context& ctx = *x.context();
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.sorted_terms()) {
    s += term_prefix(c, first, !w.empty());
    for (std::size_t i = 0; i < w.size(); ++i)
      s += "e(" + ctx.symbol(ctx.gen_row(w[i])).str() + "," +
           ctx.symbol(ctx.gen_col(w[i])).str() + ")";
    first = false;
  }
  return s;
}

std::string render_latex(const EnvElement& x) {
  if (x.is_zero()) return "0";
  const Context& ctx = *x.context();
  auto sym_latex = [](Symbol s) {
    return s.kind == SymKind::proper ? std::to_string(s.index)
                                     : "\\alpha_{" + std::to_string(s.index) + "}";
  };
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.sorted_terms()) {
    Rational a = c.sign() < 0 ? -c : c;
    s += c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (!a.is_one() || w.empty()) {
      if (a.is_integer())
        s += a.str();
      else
        s += "\\tfrac{" + a.num().str() + "}{" + a.den().str() + "}";
      if (!w.empty()) s += "\\,";
    }
    for (std::size_t i = 0; i < w.size(); ++i)
      s += "e_{" + sym_latex(ctx.symbol(ctx.gen_row(w[i]))) + "," +
           sym_latex(ctx.symbol(ctx.gen_col(w[i]))) + "}";
    first = false;
  }
  return s;
}

namespace {

nlohmann::json symbol_to_json(Symbol s) {
  return {{"kind", s.kind == SymKind::proper ? "proper" : "virtual"}, {"index", s.index}};
}

Symbol symbol_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int index = j.at("index").get<int>();
  if (kind == "proper") return Symbol::proper(index);
  if (kind == "virtual") return Symbol::virt(index);
  throw std::invalid_argument("element json: unknown symbol kind '" + kind + "'");
}

nlohmann::json rational_to_json(const Rational& c) {
  nlohmann::json j = nlohmann::json::array();
  if (c.num().fits_int64())
    j.push_back(c.num().to_int64());
  else
    j.push_back(c.num().str());
  if (c.den().fits_int64())
    j.push_back(c.den().to_int64());
  else
    j.push_back(c.den().str());
  return j;
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  return BigInt(j.get<long long>());
}

}  // namespace

nlohmann::json element_to_json(const EnvElement& x) {
  const Context& ctx = *x.context();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : x.sorted_terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
      word.push_back({symbol_to_json(ctx.symbol(ctx.gen_row(w[i]))),
                      symbol_to_json(ctx.symbol(ctx.gen_col(w[i])))});
    terms.push_back({{"coeff", rational_to_json(c)}, {"word", word}});
  }
  return {{"context", {{"m", ctx.m()}, {"n", ctx.n()}}}, {"terms", terms}};
}

EnvElement element_from_json(const nlohmann::json& j) {
  int m = j.at("context").at("m").get<int>();
  int n = j.at("context").at("n").get<int>();
  ContextPtr ctx = Context::make(m, n);
  EnvElement x(ctx);
  for (const auto& t : j.at("terms")) {
    const auto& cj = t.at("coeff");
    Rational c(bigint_from_json(cj.at(0)), bigint_from_json(cj.at(1)));
    Word w;
    for (const auto& pair : t.at("word"))
      w.push_back(ctx->gen(symbol_from_json(pair.at(0)), symbol_from_json(pair.at(1))));
    x.add_term(w, c);
  }
  return x;
}

std::string render(const EnvElement& x, Format f) {
  switch (f) {
    case Format::text: return render_text(x);
    case Format::latex: return render_latex(x);
    case Format::json: return element_to_json(x).dump();
  }
  return {};
}

std::string render_text(const ShiftedPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    s += term_prefix(c, first, !e.empty());
    bool started = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (started) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      started = true;
    }
    first = false;
  }
  return s;
}

std::string render_latex(const ShiftedPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    Rational a = c.sign() < 0 ? -c : c;
    s += c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (!a.is_one() || e.empty()) {
      if (a.is_integer())
        s += a.str();
      else
        s += "\\tfrac{" + a.num().str() + "}{" + a.den().str() + "}";
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      s += "x_{" + std::to_string(i + 1) + "}";
      if (e[i] > 1) s += "^{" + std::to_string(e[i]) + "}";
    }
    first = false;
  }
  return s;
}

std::string render(const ShiftedPoly& p, Format f) {
  if (f == Format::latex) return render_latex(p);
  if (f == Format::json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.sorted_terms())
      terms.push_back({{"coeff", rational_to_json(c)}, {"exponents", e}});
    return nlohmann::json{{"n", p.n()}, {"terms", terms}}.dump();
  }
  return render_text(p);
}

std::string render_text(const SuperPolynomial& p) {
  if (p.is_zero()) return "0";
  const RepContext& ctx = *p.context();
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    s += term_prefix(c, first, !m.empty());
    for (auto v : m) s += ctx.var_str(v);
    first = false;
  }
  return s;
}

std::string render(const SuperPolynomial& p, Format f) {
  if (f == Format::json) {
    const RepContext& ctx = *p.context();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.sorted_terms()) {
      nlohmann::json vars = nlohmann::json::array();
      for (auto v : m) {
        int row = ctx.var_row(v);
        nlohmann::json rj;
        if (row == ctx.gamma_row())
          rj = {{"kind", "gamma"}, {"index", 1}};
        else if (row < ctx.n())
          rj = {{"kind", "proper"}, {"index", row + 1}};
        else
          rj = {{"kind", "virtual"}, {"index", row - ctx.n() + 1}};
        vars.push_back({rj, ctx.var_col(v)});
      }
      terms.push_back({{"coeff", rational_to_json(c)}, {"vars", vars}});
    }
    return nlohmann::json{
        {"context", {{"m", ctx.m()}, {"n", ctx.n()}, {"d", ctx.d()}}}, {"terms", terms}}
        .dump();
  }
  return render_text(p);  // latex rendering for polynomials mirrors text
}

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& i : r.identities)
    ids.push_back({{"name", i.name},
                   {"anchor", i.anchor},
                   {"params", i.params},
                   {"pass", i.pass},
                   {"lhs_terms", i.lhs_terms},
                   {"rhs_terms", i.rhs_terms},
                   {"millis", i.millis},
                   {"note", i.note}});
  return {{"suite", r.suite}, {"params", r.params}, {"pass", r.all_pass()}, {"identities", ids}};
}

SuiteReport report_from_json(const nlohmann::json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.params = j.at("params").get<std::string>();
  for (const auto& i : j.at("identities")) {
    IdentityReport id;
    id.name = i.at("name").get<std::string>();
    id.anchor = i.at("anchor").get<std::string>();
    id.params = i.at("params").get<std::string>();
    id.pass = i.at("pass").get<bool>();
    id.lhs_terms = i.at("lhs_terms").get<long long>();
    id.rhs_terms = i.at("rhs_terms").get<long long>();
    id.millis = i.at("millis").get<double>();
    id.note = i.at("note").get<std::string>();
    r.identities.push_back(std::move(id));
  }
  return r;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

Symbol parse_row_symbol(Cursor& c) {
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == 'a') {
    ++c.i;
    std::size_t start = c.i;
    while (c.i < c.s.size() && isdigit(c.s[c.i])) ++c.i;
    if (start == c.i) throw std::invalid_argument("parse: expected virtual index after 'a'");
    return Symbol::virt(std::stoi(c.s.substr(start, c.i - start)));
  }
  std::size_t start = c.i;
  while (c.i < c.s.size() && isdigit(c.s[c.i])) ++c.i;
  if (start == c.i) throw std::invalid_argument("parse: expected row symbol");
  return Symbol::proper(std::stoi(c.s.substr(start, c.i - start)));
}

int parse_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && isdigit(c.s[c.i])) ++c.i;
  if (start == c.i) throw std::invalid_argument("parse: expected integer");
  return std::stoi(c.s.substr(start, c.i - start));
}

}  // namespace

SuperPolynomial parse_superpoly(const RepContextPtr& ctx, const std::string& text) {
  SuperPolynomial out(ctx);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw std::invalid_argument("parse: expected '+' or '-' between terms");
    }
    first = false;
    c.skip_ws();
    Rational coeff(sign);
    if (c.i < c.s.size() && isdigit(c.s[c.i])) {
      std::size_t start = c.i;
      while (c.i < c.s.size() && (isdigit(c.s[c.i]) || c.s[c.i] == '/')) ++c.i;
      coeff = coeff * Rational::from_string(c.s.substr(start, c.i - start));
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') ++c.i;
    }
    std::vector<std::uint32_t> vars;
    while (c.peek() == '(') {
      ++c.i;
      Symbol row = parse_row_symbol(c);
      if (c.peek() != '|') throw std::invalid_argument("parse: expected '|'");
      ++c.i;
      int col = parse_int(c);
      if (c.peek() != ')') throw std::invalid_argument("parse: expected ')'");
      ++c.i;
      vars.push_back(ctx->var(ctx->row_id(row), col));
    }
    SuperPolynomial term(ctx);
    term.add_normalized(std::move(vars), coeff);
    out += term;
  }
  return out;
}

}  // namespace ugl
