#include "ugl/shifted.hpp"

#include <algorithm>
#include <stdexcept>

namespace ugl {

namespace {

void trim_exps(std::vector<std::uint32_t>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

ShiftedPoly ShiftedPoly::constant(int n, Rational c) {
  ShiftedPoly p(n);
  p.add_term({}, c);
  return p;
}

ShiftedPoly ShiftedPoly::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("ShiftedPoly: variable out of range");
  ShiftedPoly p(n);
  std::vector<std::uint32_t> e(i, 0);
  e[i - 1] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

void ShiftedPoly::add_term(std::vector<std::uint32_t> exps, const Rational& c) {
  if (c.is_zero()) return;
  trim_exps(exps);
  auto [it, ins] = terms_.try_emplace(std::move(exps), c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ShiftedPoly ShiftedPoly::operator-() const {
  ShiftedPoly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b) {
  ShiftedPoly r = a;
  if (r.n_ == 0) r.n_ = b.n_;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b) {
  ShiftedPoly r = a;
  if (r.n_ == 0) r.n_ = b.n_;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

ShiftedPoly operator*(const ShiftedPoly& a, const ShiftedPoly& b) {
  ShiftedPoly r(a.n_ ? a.n_ : b.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<std::uint32_t> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

ShiftedPoly ShiftedPoly::scaled(const Rational& k) const {
  ShiftedPoly r(n_);
  if (k.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

bool operator==(const ShiftedPoly& a, const ShiftedPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

Rational ShiftedPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) < n_)
    throw std::invalid_argument("ShiftedPoly::eval: not enough coordinates");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

ShiftedPoly ShiftedPoly::substitute_affine(const std::vector<int>& target_var,
                                           const std::vector<Rational>& shift) const {
  ShiftedPoly out(n_);
  for (const auto& [e, c] : terms_) {
    ShiftedPoly term = ShiftedPoly::constant(n_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      ShiftedPoly base = ShiftedPoly::variable(n_, target_var[i]);
      if (!shift[i].is_zero()) base += ShiftedPoly::constant(n_, shift[i]);
      for (std::uint32_t k = 0; k < e[i]; ++k) term = term * base;
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<std::vector<std::uint32_t>, Rational>> ShiftedPoly::sorted_terms() const {
  std::vector<std::pair<std::vector<std::uint32_t>, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first > b.first;
  });
  return v;
}

ShiftedPoly hc_image(const EnvElement& x, int n, bool check_central, Exec ex) {
  if (x.context()->n() != n || x.context()->m() != 0)
    throw std::invalid_argument("hc_image: element must live in gl(0|n)");
  if (check_central && !is_central(x, ex))
    throw std::domain_error("hc_image: element is not central");
  EnvElement nf = pbw_normal_form(x, ex);
  const Context& ctx = *x.context();
  ShiftedPoly out(n);
  for (const auto& [w, c] : nf.terms()) {
    std::vector<std::uint32_t> exps(n, 0);
    bool cartan = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int r = ctx.gen_row(w[i]), col = ctx.gen_col(w[i]);
      if (r != col) {
        cartan = false;
        break;
      }
      ++exps[r];
    }
    if (cartan) out.add_term(std::move(exps), c);
  }
  return out;
}

ShiftedPoly shifted_elementary(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("shifted_elementary: need 0 <= k <= n");
  ShiftedPoly sum(n);
  if (k == 0) return ShiftedPoly::constant(n, Rational(1));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    ShiftedPoly prod = ShiftedPoly::constant(n, Rational(1));
    for (int r = 0; r < k; ++r) {
      ShiftedPoly f = ShiftedPoly::variable(n, idx[r]);
      if (k - 1 - r) f += ShiftedPoly::constant(n, Rational(k - 1 - r));
      prod = prod * f;
    }
    sum += prod;
    int j = k - 1;
    while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return sum;
}

bool is_shifted_symmetric(const ShiftedPoly& f) {
  const int n = f.n();
  std::vector<int> target(n);
  std::vector<Rational> shift(n);
  for (int i = 1; i < n; ++i) {
    for (int v = 0; v < n; ++v) {
      target[v] = v + 1;
      shift[v] = Rational(0);
    }
    target[i - 1] = i + 1;   // x_i -> x_{i+1} - 1
    shift[i - 1] = Rational(-1);
    target[i] = i;           // x_{i+1} -> x_i + 1
    shift[i] = Rational(1);
    if (!(f == f.substitute_affine(target, shift))) return false;
  }
  return true;
}

ShiftedPoly hook_product_poly(int n, int p) {
  if (p < 0) throw std::invalid_argument("hook_product_poly: p must be nonnegative");
  ShiftedPoly prod = ShiftedPoly::constant(n, Rational(1));
  for (int j = 1; j <= p; ++j)
    for (int r = 1; r <= n; ++r) {
      ShiftedPoly f = ShiftedPoly::variable(n, r);
      f += ShiftedPoly::constant(n, Rational(-j + n - r + 1));
      prod = prod * f;
    }
  long long e = static_cast<long long>(n) * (static_cast<long long>(p) * (p - 1) / 2);
  return (e % 2) ? -prod : prod;
}

ShiftedPoly shifted_arg_elementary(int h, int n) {
  if (h < 0 || h > n) throw std::invalid_argument("shifted_arg_elementary: need 0 <= h <= n");
  if (h == 0) return ShiftedPoly::constant(n, Rational(1));
  ShiftedPoly sum(n);
  std::vector<int> idx(h);
  for (int i = 0; i < h; ++i) idx[i] = i + 1;
  while (true) {
    ShiftedPoly prod = ShiftedPoly::constant(n, Rational(1));
    for (int r = 0; r < h; ++r) {
      ShiftedPoly f = ShiftedPoly::variable(n, idx[r]);
      f += ShiftedPoly::constant(n, Rational(-(idx[r] - 1)));
      prod = prod * f;
    }
    sum += prod;
    int j = h - 1;
    while (j >= 0 && idx[j] == n - (h - 1 - j)) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < h; ++t) idx[t] = idx[t - 1] + 1;
  }
  return sum;
}

SuperPolynomial char_h(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("char_h: need 1 <= k <= n");
  RepContextPtr ctx = RepContext::make(0, n, n);
  SuperPolynomial sum(ctx);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    // ordinary determinant of the principal submatrix
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      int s = 1;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[i] > perm[j]) s = -s;
      std::vector<std::uint32_t> vars;
      for (int i = 0; i < k; ++i) vars.push_back(ctx->var(idx[i] - 1, idx[perm[i]]));
      sum.add_normalized(std::move(vars), Rational(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    int j = k - 1;
    while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return sum;
}

SuperPolynomial koszul_shaped(const Shape& lambda, int n) {
  if (lambda.rows() && lambda.part(0) > n)
    throw std::invalid_argument("koszul_shaped: lambda_1 exceeds n");
  RepContextPtr ctx = RepContext::make(0, n, n);
  SuperPolynomial sum(ctx);
  for (const Tableau& S : row_increasing_tableaux(lambda, n)) {
    std::vector<std::vector<int>> T;
    for (const auto& row : S.rows) {
      std::vector<int> trow;
      for (const Symbol& z : row) trow.push_back(z.index);
      T.push_back(std::move(trow));
    }
    sum += young_bitableau(ctx, S, T);
  }
  return sum;
}

}  // namespace ugl
