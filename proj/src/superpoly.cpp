#include "ugl/superpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ugl {

namespace {
std::mutex g_rep_registry_mutex;
std::map<std::tuple<int, int, int>, std::weak_ptr<const RepContext>> g_rep_registry;
}  // namespace

RepContextPtr RepContext::make(int virtual_count, int proper_count, int cols) {
  if (proper_count < 1 || virtual_count < 0 || cols < 1)
    throw std::invalid_argument("RepContext: need n >= 1, m >= 0, d >= 1");
  std::lock_guard<std::mutex> lock(g_rep_registry_mutex);
  auto key = std::make_tuple(virtual_count, proper_count, cols);
  if (auto it = g_rep_registry.find(key); it != g_rep_registry.end())
    if (auto sp = it->second.lock()) return sp;
  RepContextPtr ctx(new RepContext(virtual_count, proper_count, cols));
  g_rep_registry[key] = ctx;
  return ctx;
}

int RepContext::row_id(Symbol s) const {
  if (s.kind == SymKind::proper) {
    if (s.index < 1 || s.index > n_) throw std::invalid_argument("RepContext: bad proper row");
    return s.index - 1;
  }
  if (s.index < 1 || s.index > m_) throw std::invalid_argument("RepContext: bad virtual row");
  return n_ + s.index - 1;
}

std::string RepContext::var_str(std::uint32_t v) const {
  int row = var_row(v);
  std::string r = row == gamma_row() ? std::string("g")
                  : row < n_         ? std::to_string(row + 1)
                                     : "a" + std::to_string(row - n_ + 1);
  return "(" + r + "|" + std::to_string(var_col(v)) + ")";
}

SuperPolynomial SuperPolynomial::one(RepContextPtr ctx) {
  SuperPolynomial p(std::move(ctx));
  p.terms_.emplace(Monomial{}, Rational(1));
  return p;
}

SuperPolynomial SuperPolynomial::variable(const RepContextPtr& ctx, Symbol row, int col) {
  if (col < 1 || col > ctx->d()) throw std::invalid_argument("SuperPolynomial: bad column");
  SuperPolynomial p(ctx);
  p.terms_.emplace(Monomial{ctx->var(ctx->row_id(row), col)}, Rational(1));
  return p;
}

void SuperPolynomial::add_normalized(std::vector<std::uint32_t> vars, Rational coeff) {
  if (coeff.is_zero()) return;
  // insertion sort, counting odd-odd transpositions
  int sign = 1;
  for (std::size_t i = 1; i < vars.size(); ++i) {
    std::uint32_t v = vars[i];
    int vp = ctx_->var_parity(v);
    std::size_t j = i;
    while (j > 0 && vars[j - 1] > v) {
      vars[j] = vars[j - 1];
      if (vp && ctx_->var_parity(vars[j - 1])) sign = -sign;
      --j;
    }
    vars[j] = v;
  }
  for (std::size_t i = 1; i < vars.size(); ++i)
    if (vars[i] == vars[i - 1] && ctx_->var_parity(vars[i])) return;  // odd square
  add_term(vars, sign < 0 ? -coeff : coeff);
}

void SuperPolynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(mono, coeff);
  if (!ins) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SuperPolynomial::monomial_parity(const Monomial& mono) const {
  int p = 0;
  for (auto v : mono) p ^= ctx_->var_parity(v);
  return p;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

void require_same_context(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (a.context() && b.context() && a.context() != b.context())
    throw std::invalid_argument("SuperPolynomial: mixed algebra contexts");
}

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_context(a, b);
  SuperPolynomial r = a;
  r += b;
  return r;
}

SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_context(a, b);
  SuperPolynomial r = a;
  r += -b;
  return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_context(a, b);
  SuperPolynomial r(a.context() ? a.context() : b.context());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<std::uint32_t> vars;
      vars.reserve(ma.size() + mb.size());
      vars.insert(vars.end(), ma.begin(), ma.end());
      vars.insert(vars.end(), mb.begin(), mb.end());
      r.add_normalized(std::move(vars), ca * cb);
    }
  return r;
}

SuperPolynomial SuperPolynomial::scaled(const Rational& k) const {
  SuperPolynomial r(ctx_);
  if (k.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

std::vector<std::pair<Monomial, Rational>> SuperPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return v;
}

SuperPolynomial superpolarize_rows(int row_a, int row_b, const SuperPolynomial& p) {
  const RepContext& ctx = *p.context();
  int dpar = (ctx.row_is_proper(row_a) ? 1 : 0) ^ (ctx.row_is_proper(row_b) ? 1 : 0);
  // |D_{a,b}| = |a| + |b|; proper symbols are odd, virtual/gamma even
  SuperPolynomial out(p.context());
  for (const auto& [mono, coeff] : p.terms()) {
    int prefix = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      int vp = ctx.var_parity(mono[i]);
      if (ctx.var_row(mono[i]) == row_b) {
        std::vector<std::uint32_t> vars(mono);
        vars[i] = ctx.var(row_a, ctx.var_col(mono[i]));
        int sgn = (dpar && prefix) ? -1 : 1;
        out.add_normalized(std::move(vars), sgn < 0 ? -coeff : coeff);
      }
      prefix ^= vp;
    }
  }
  return out;
}

SuperPolynomial superpolarize(Symbol a, Symbol b, const SuperPolynomial& p) {
  const RepContext& ctx = *p.context();
  return superpolarize_rows(ctx.row_id(a), ctx.row_id(b), p);
}

namespace {

void check_act_contexts(const EnvElement& x, const SuperPolynomial& p) {
  const Context& ac = *x.context();
  const RepContext& rc = *p.context();
  if (ac.n() != rc.n() || ac.m() > rc.m())
    throw std::invalid_argument("act: element context does not embed in polynomial context");
}

SuperPolynomial act_word(const Context& ac, const Word& w, const SuperPolynomial& p) {
  const RepContext& rc = *p.context();
  SuperPolynomial q = p;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (q.is_zero()) break;
    int row = ac.gen_row(w[i]);  // algebra symbol ids coincide with rep row ids
    int col = ac.gen_col(w[i]);
    (void)rc;
    q = superpolarize_rows(row, col, q);
  }
  return q;
}

}  // namespace

SuperPolynomial act(const EnvElement& x, const SuperPolynomial& p, Exec ex) {
  check_act_contexts(x, p);
  const Context& ac = *x.context();
  SuperPolynomial out(p.context());
  if (x.is_zero() || p.is_zero()) return out;
#ifdef _OPENMP
  if (ex == Exec::parallel && x.term_count() > 8) {
    auto terms = x.sorted_terms();
#pragma omp parallel
    {
      SuperPolynomial local(p.context());
#pragma omp for schedule(dynamic, 4) nowait
      for (long i = 0; i < static_cast<long>(terms.size()); ++i)
        local += act_word(ac, terms[i].first, p).scaled(terms[i].second);
#pragma omp critical
      out += local;
    }
    return out;
  }
#else
  (void)ex;
#endif
  for (const auto& [w, c] : x.terms()) out += act_word(ac, w, p).scaled(c);
  return out;
}

namespace ref {
SuperPolynomial act(const EnvElement& x, const SuperPolynomial& p) {
  check_act_contexts(x, p);
  const Context& ac = *x.context();
  SuperPolynomial out(p.context());
  for (const auto& [w, c] : x.terms()) {
    SuperPolynomial q = p;
    for (std::size_t i = w.size(); i-- > 0;)
      q = superpolarize_rows(ac.gen_row(w[i]), ac.gen_col(w[i]), q);
    out += q.scaled(c);
  }
  return out;
}
}  // namespace ref

SuperPolynomial biproduct(const RepContextPtr& ctx, const std::vector<Symbol>& omega,
                          const std::vector<int>& cols) {
  SuperPolynomial zero(ctx);
  if (omega.size() != cols.size()) return zero;
  const int g = ctx->gamma_row();
  std::vector<std::uint32_t> vars;
  for (int c : cols) {
    if (c < 1 || c > ctx->d()) throw std::invalid_argument("biproduct: bad column index");
    vars.push_back(ctx->var(g, c));
  }
  SuperPolynomial p(ctx);
  p.add_normalized(std::move(vars), Rational(1));
  for (std::size_t i = omega.size(); i-- > 0;) {
    if (p.is_zero()) break;
    p = superpolarize_rows(ctx->row_id(omega[i]), g, p);
  }
  return p;
}

SuperPolynomial young_bitableau(const RepContextPtr& ctx, const Tableau& S,
                                const std::vector<std::vector<int>>& T) {
  SuperPolynomial zero(ctx);
  if (S.rows.size() != T.size()) return zero;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (S.rows[i].size() != T[i].size()) return zero;

  // sign (-1)^{sum_{s>=2} |w_s| (|v_1|+...+|v_{s-1}|)}
  int e = 0, col_par_prefix = 0;
  for (std::size_t s = 0; s < S.rows.size(); ++s) {
    int row_par = 0;
    for (const Symbol& z : S.rows[s]) row_par ^= z.parity();
    if (s > 0 && row_par && col_par_prefix) e ^= 1;
    col_par_prefix ^= static_cast<int>(T[s].size()) & 1;
  }

  SuperPolynomial prod = SuperPolynomial::one(ctx);
  for (std::size_t s = 0; s < S.rows.size(); ++s) {
    if (prod.is_zero()) break;
    prod = prod * biproduct(ctx, S.rows[s], T[s]);
  }
  return e ? -prod : prod;
}

void validate_weight(const Weight& mu, int n) {
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("weight: expected exactly n parts");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("weight: parts must be nonnegative");
    if (i > 0 && mu[i] > mu[i - 1])
      throw std::invalid_argument("weight: parts must be weakly decreasing");
  }
}

Shape weight_conjugate(const Weight& mu) {
  if (mu.empty() || mu[0] == 0) return Shape();
  std::vector<int> conj(mu[0], 0);
  for (int p : mu)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Shape(conj);
}

SuperPolynomial highest_weight_vector(const RepContextPtr& ctx, const Weight& mu) {
  validate_weight(mu, ctx->n());
  Shape conj = weight_conjugate(mu);
  if (conj.rows() && conj.part(0) > ctx->d())
    throw std::invalid_argument("highest_weight_vector: d too small for the weight");
  Tableau S;
  std::vector<std::vector<int>> T;
  for (int i = 0; i < conj.rows(); ++i) {
    std::vector<Symbol> srow;
    std::vector<int> trow;
    for (int j = 1; j <= conj.part(i); ++j) {
      srow.push_back(Symbol::proper(j));
      trow.push_back(j);
    }
    S.rows.push_back(std::move(srow));
    T.push_back(std::move(trow));
  }
  return young_bitableau(ctx, S, T);
}

Rational hook_eigenvalue(const Shape& lambda, const Weight& mu, int n) {
  validate_weight(mu, n);
  if (lambda.rows() && lambda.part(0) > n)
    throw std::invalid_argument("hook_eigenvalue: lambda_1 exceeds n");
  long long esum = 0;
  for (int i = 1; i < lambda.rows(); ++i) {
    long long prev = 0;
    for (int j = 0; j < i; ++j) prev += lambda.part(j);
    esum += static_cast<long long>(lambda.part(i)) * prev;
  }
  BigInt prod(1);
  for (int i = 1; i <= lambda.rows(); ++i) {
    int li = lambda.part(i - 1);
    for (int r = 1; r <= li; ++r) prod *= BigInt(mu[r - 1] - i + li - r + 1);
  }
  if (esum % 2) prod.negate();
  return Rational(prod);
}

std::optional<Rational> extract_scalar(const SuperPolynomial& p, const SuperPolynomial& v) {
  if (v.is_zero()) throw std::invalid_argument("extract_scalar: reference vector is zero");
  if (p.is_zero()) return Rational(0);
  if (p.term_count() != v.term_count()) return std::nullopt;
  std::optional<Rational> ratio;
  for (const auto& [m, c] : v.terms()) {
    auto it = p.terms().find(m);
    if (it == p.terms().end()) return std::nullopt;
    Rational r = it->second / c;
    if (!ratio)
      ratio = r;
    else if (*ratio != r)
      return std::nullopt;
  }
  return ratio;
}

SuperPolynomial partial_derivative(const SuperPolynomial& p, std::uint32_t var) {
  const RepContext& ctx = *p.context();
  if (ctx.var_parity(var)) throw std::invalid_argument("partial_derivative: odd variable");
  SuperPolynomial out(p.context());
  for (const auto& [mono, coeff] : p.terms()) {
    auto lo = std::lower_bound(mono.begin(), mono.end(), var);
    if (lo == mono.end() || *lo != var) continue;
    auto hi = std::upper_bound(lo, mono.end(), var);
    long long mult = hi - lo;
    Monomial reduced;
    reduced.reserve(mono.size() - 1);
    reduced.insert(reduced.end(), mono.begin(), lo);
    reduced.insert(reduced.end(), lo + 1, mono.end());
    out.add_term(reduced, coeff * Rational(mult));
  }
  return out;
}

SuperPolynomial cayley_omega(const SuperPolynomial& f) {
  const RepContextPtr& ctx = f.context();
  const int n = ctx->n();
  if (ctx->d() != n) throw std::invalid_argument("cayley_omega: needs a square proper matrix");
  for (const auto& [mono, c] : f.terms())
    for (auto v : mono)
      if (ctx->var_parity(v))
        throw std::invalid_argument("cayley_omega: input contains odd variables");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SuperPolynomial sum(ctx);
  do {
    int s = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) s = -s;
    SuperPolynomial q = f;
    for (int i = 0; i < n && !q.is_zero(); ++i)
      q = partial_derivative(q, ctx->var(i, perm[i] + 1));
    sum += s < 0 ? -q : q;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

SuperPolynomial bracket_poly(const RepContextPtr& ctx) {
  const int n = ctx->n();
  if (ctx->d() != n) throw std::invalid_argument("bracket_poly: needs a square proper matrix");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SuperPolynomial sum(ctx);
  do {
    int s = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) s = -s;
    std::vector<std::uint32_t> vars;
    for (int i = 0; i < n; ++i) vars.push_back(ctx->var(i, perm[i] + 1));
    sum.add_normalized(std::move(vars), Rational(s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool verify_capelli_identity_case(int n, int d, const SuperPolynomial& f, Exec ex) {
  if (n < d)
    throw std::invalid_argument("capelli identity: n < d unsupported");
  EnvElement H = capelli_H(n, n);
  SuperPolynomial lhs = act(H, f, ex);
  if (n > d) return lhs.is_zero();
  SuperPolynomial rhs = bracket_poly(f.context()) * cayley_omega(f);
  return (lhs - rhs).is_zero();
}

}  // namespace ugl
