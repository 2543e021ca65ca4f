#include "ugl/capelli.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ugl {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}


std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int j = k - 1;
    while (j >= 0 && cur[j] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++cur[j];
    for (int t = j + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

std::string subset_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

void check_subset_of_bottom_row(const std::vector<int>& J, int bound, const char* who) {
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > bound)
      throw std::invalid_argument(std::string(who) + ": entries must lie in 1..last part");
    if (i > 0 && J[i] <= J[i - 1])
      throw std::invalid_argument(std::string(who) + ": entries must be strictly increasing");
  }
}

}  // namespace

ScalarPoly falling_factorial_poly(int k) {
  ScalarPoly r{Rational(1)};
  for (int i = 0; i < k; ++i)
    r = r * (ScalarPoly::monomial(Rational(1), 1) + ScalarPoly(Rational(-i)));
  return r;
}


EnvElement capelli_minor(const ContextPtr& ctx, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  EnvMatrix a(k, std::vector<EnvElement>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      EnvElement e = EnvElement::generator(ctx, Symbol::proper(idx[r]), Symbol::proper(idx[c]));
      if (r == c) e += EnvElement::one(ctx).scaled(Rational(k - 1 - r));
      a[r][c] = std::move(e);
    }
  return cdet(a);
}

EnvElement capelli_H_in(const ContextPtr& ctx, int sub_n, int k) {
  if (k < 0 || k > sub_n) throw std::invalid_argument("capelli_H: need 0 <= k <= n");
  if (k == 0) return EnvElement::one(ctx);
  EnvElement sum(ctx);
  for (const auto& idx : increasing_subsets(sub_n, k)) sum += capelli_minor(ctx, idx);
  return sum;
}

EnvElement capelli_H(int n, int k) { return capelli_H_in(Context::make(0, n), n, k); }

EnvElement capelli_H_shift_in(const ContextPtr& ctx, int sub_n, long long p) {
  EnvMatrix a(sub_n, std::vector<EnvElement>(sub_n));
  for (int r = 0; r < sub_n; ++r)
    for (int c = 0; c < sub_n; ++c) {
      EnvElement e =
          EnvElement::generator(ctx, Symbol::proper(r + 1), Symbol::proper(c + 1));
      if (r == c) e += EnvElement::one(ctx).scaled(Rational(-p + sub_n - (r + 1)));
      a[r][c] = std::move(e);
    }
  return cdet(a);
}

EnvElement capelli_H_shift(int n, long long p) {
  return capelli_H_shift_in(Context::make(0, n), n, p);
}

EnvElement capelli_C_in(const ContextPtr& ctx, int sub_n, long long p) {
  EnvElement sum(ctx);
  for (int j = 0; j <= sub_n; ++j) {
    Rational coef = Rational(falling_factorial(p, sub_n - j));
    if ((sub_n - j) & 1) coef = -coef;
    if (coef.is_zero()) continue;
    sum += capelli_H_in(ctx, sub_n, j).scaled(coef);
  }
  return sum;
}

EnvElement capelli_C(int n, long long p) { return capelli_C_in(Context::make(0, n), n, p); }

EnvElement capelli_deruyts(const Shape& lambda, int n, Exec ex) {
  if (lambda.rows() == 0) return EnvElement::one(Context::make(0, n));
  if (lambda.part(0) > n) throw std::invalid_argument("capelli_deruyts: lambda_1 exceeds n");
  ContextPtr ctx = Context::make(lambda.rows(), n);
  VirtualPool pool = VirtualPool::make(ctx, lambda.rows());
  return capelli_bitableau(reverse_deruyts(lambda, n), deruyts(lambda, n), pool, ex);
}

EnvElement rectangular_K(int n, int p, Exec ex) {
  if (p < 0) throw std::invalid_argument("rectangular_K: p must be nonnegative");
  if (p == 0) return EnvElement::one(Context::make(0, n));
  return capelli_deruyts(Shape::rectangular(n, p), n, ex);
}

std::vector<Tableau> row_increasing_tableaux(const Shape& lambda, int n) {
  std::vector<std::vector<std::vector<int>>> row_choices;
  for (int i = 0; i < lambda.rows(); ++i)
    row_choices.push_back(increasing_subsets(n, lambda.part(i)));
  std::vector<Tableau> out;
  std::vector<std::size_t> pick(lambda.rows(), 0);
  while (true) {
    Tableau t;
    for (int i = 0; i < lambda.rows(); ++i) {
      std::vector<Symbol> row;
      for (int v : row_choices[i][pick[i]]) row.push_back(Symbol::proper(v));
      t.rows.push_back(std::move(row));
    }
    out.push_back(std::move(t));
    int i = lambda.rows() - 1;
    while (i >= 0 && ++pick[i] == row_choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

EnvElement shaped_K(const Shape& lambda, int n, Exec ex) {
  if (lambda.rows() == 0) return EnvElement::one(Context::make(0, n));
  if (lambda.part(0) > n) throw std::invalid_argument("shaped_K: lambda_1 exceeds n");
  ContextPtr ctx = Context::make(lambda.rows(), n);
  VirtualPool pool = VirtualPool::make(ctx, lambda.rows());
  EnvElement sum(Context::make(0, n));
  for (const Tableau& S : row_increasing_tableaux(lambda, n))
    sum += capelli_bitableau(S, S, pool, ex);
  return sum;
}

EnvPoly capelli_H_poly(int n) {
  ContextPtr ctx = Context::make(0, n);
  std::vector<std::vector<EnvPoly>> a(n, std::vector<EnvPoly>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      EnvPoly e(EnvElement::generator(ctx, Symbol::proper(r + 1), Symbol::proper(c + 1)));
      if (r == c) {
        e = e + EnvPoly(EnvElement::one(ctx).scaled(Rational(n - (r + 1))));
        e = e - EnvPoly::monomial(EnvElement::one(ctx), 1);
      }
      a[r][c] = std::move(e);
    }
  return cdet(a);
}

EnvPoly capelli_C_poly(int n) {
  ContextPtr ctx = Context::make(0, n);
  std::vector<std::vector<EnvPoly>> a(n, std::vector<EnvPoly>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      EnvPoly e(EnvElement::generator(ctx, Symbol::proper(r + 1), Symbol::proper(c + 1)));
      if (r == c) {
        e = e + EnvPoly(EnvElement::one(ctx).scaled(Rational(-(r + 1) + 1)));
        e = e + EnvPoly::monomial(EnvElement::one(ctx), 1);
      }
      a[r][c] = std::move(e);
    }
  return cdet(a);
}

EnvElement capelli_C_coeff(int n, int h) {
  if (h < 1 || h > n) throw std::invalid_argument("capelli_C_coeff: need 1 <= h <= n");
  return capelli_C_poly(n).coeff_or_zero(n - h);
}

EnvElement capelli_C_coeff_minors(int n, int h) {
  if (h < 1 || h > n) throw std::invalid_argument("capelli_C_coeff_minors: need 1 <= h <= n");
  ContextPtr ctx = Context::make(0, n);
  EnvElement sum(ctx);
  for (const auto& idx : increasing_subsets(n, h)) {
    EnvMatrix a(h, std::vector<EnvElement>(h));
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < h; ++c) {
        EnvElement e =
            EnvElement::generator(ctx, Symbol::proper(idx[r]), Symbol::proper(idx[c]));
        if (r == c) e += EnvElement::one(ctx).scaled(Rational(-idx[r] + 1));
        a[r][c] = std::move(e);
      }
    sum += cdet(a);
  }
  return sum;
}

EnvElement subset_bitableau(const std::vector<int>& J, int n, Exec ex) {
  if (J.empty()) return EnvElement::one(Context::make(0, n));
  ContextPtr ctx = Context::make(1, n);
  VirtualPool pool = VirtualPool::make(ctx, 1);
  Tableau S, T;
  std::vector<Symbol> left, right;
  for (auto it = J.rbegin(); it != J.rend(); ++it) left.push_back(Symbol::proper(*it));
  for (int j : J) right.push_back(Symbol::proper(j));
  S.rows.push_back(left);
  T.rows.push_back(right);
  return capelli_bitableau(S, T, pool, ex);
}

EnvElement append_rows(const Shape& lambda, const std::vector<int>& J, int n, Exec ex) {
  check_subset_of_bottom_row(J, lambda.last_part(), "append_rows");
  if (J.empty()) return capelli_deruyts(lambda, n, ex);
  Tableau S = reverse_deruyts(lambda, n), T = deruyts(lambda, n);
  std::vector<Symbol> left, right;
  for (auto it = J.rbegin(); it != J.rend(); ++it) left.push_back(Symbol::proper(*it));
  for (int j : J) right.push_back(Symbol::proper(j));
  S.rows.push_back(left);
  T.rows.push_back(right);
  ContextPtr ctx = Context::make(lambda.rows() + 1, n);
  VirtualPool pool = VirtualPool::make(ctx, lambda.rows() + 1);
  return capelli_bitableau(S, T, pool, ex);
}

bool equal_env_poly(const EnvPoly& a, const EnvPoly& b, Exec ex) {
  int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    EnvElement x = a.coeff_or_zero(k), y = b.coeff_or_zero(k);
    if (x.is_zero() && y.is_zero()) continue;
    if (x.is_zero() || y.is_zero()) {
      EnvElement z = x.is_zero() ? y : x;
      if (!pbw_normal_form(z, ex).is_zero()) return false;
      continue;
    }
    if (!equals(x, y, ex)) return false;
  }
  return true;
}

IdentityReport verify_row_insertion(const Shape& lambda, const std::vector<int>& M, int n,
                                    Exec ex) {
  auto t0 = std::chrono::steady_clock::now();
  check_subset_of_bottom_row(M, lambda.last_part(), "verify_row_insertion");
  const int p = lambda.rows();
  const int m = static_cast<int>(M.size());
  EnvElement K = capelli_deruyts(lambda, n, ex);
  EnvElement lhs = multiply(subset_bitableau(M, n, ex), K, ex);

  EnvElement rhs(K.context());
  std::vector<long long> weights;
  for (int k = 0; k <= m; ++k) {
    Rational w = Rational(raising_factorial(p, m - k));
    int sgn = ((static_cast<long long>(lambda.weight()) * k) % 2) ? -1 : 1;
    for (const auto& J : increasing_subsets(m, k)) {
      std::vector<int> Jset;
      for (int pos : J) Jset.push_back(M[pos - 1]);
      rhs += append_rows(lambda, Jset, n, ex).scaled(sgn < 0 ? -w : w);
      weights.push_back(w.num().to_int64());
    }
  }

  IdentityReport r;
  r.name = "row-insertion shape=(" + lambda.str() + ") M=" + subset_str(M);
  r.anchor = "row-insertion";
  r.params = "shape=(" + lambda.str() + ") M=" + subset_str(M) + " n=" + std::to_string(n);
  r.lhs_terms = static_cast<long long>(lhs.term_count());
  r.rhs_terms = static_cast<long long>(rhs.term_count());
  r.pass = equals(lhs, rhs, ex);
  std::sort(weights.rbegin(), weights.rend());
  std::string ws;
  for (std::size_t i = 0; i < weights.size(); ++i)
    ws += (i ? "," : "") + std::to_string(weights[i]);
  r.note = "raising-factorial weights " + ws;
  r.millis = ms_since(t0);
  return r;
}

IdentityReport verify_expansion(const Shape& lambda, const std::vector<int>& M, int n, Exec ex) {
  auto t0 = std::chrono::steady_clock::now();
  check_subset_of_bottom_row(M, lambda.last_part(), "verify_expansion");
  const int p = lambda.rows();
  const int m = static_cast<int>(M.size());
  EnvElement K = capelli_deruyts(lambda, n, ex);

  int lsgn = ((static_cast<long long>(lambda.weight()) * m) % 2) ? -1 : 1;
  EnvElement lhs = append_rows(lambda, M, n, ex);
  if (lsgn < 0) lhs = -lhs;

  EnvElement rhs(K.context());
  std::vector<long long> coeffs;
  for (int k = 0; k <= m; ++k) {
    Rational w = Rational(falling_factorial(p, m - k));
    if ((m - k) & 1) w = -w;
    for (const auto& J : increasing_subsets(m, k)) {
      std::vector<int> Jset;
      for (int pos : J) Jset.push_back(M[pos - 1]);
      rhs += multiply(subset_bitableau(Jset, n, ex), K, ex).scaled(w);
      coeffs.push_back(w.is_zero() ? 0 : w.num().to_int64());
    }
  }

  IdentityReport r;
  r.name = "expansion shape=(" + lambda.str() + ") M=" + subset_str(M);
  r.anchor = "expansion";
  r.params = "shape=(" + lambda.str() + ") M=" + subset_str(M) + " n=" + std::to_string(n);
  r.lhs_terms = static_cast<long long>(lhs.term_count());
  r.rhs_terms = static_cast<long long>(rhs.term_count());
  r.pass = equals(lhs, rhs, ex);
  std::string ws;
  for (std::size_t i = 0; i < coeffs.size(); ++i) ws += (i ? "," : "") + std::to_string(coeffs[i]);
  r.note = "falling-factorial coefficients " + ws;
  r.millis = ms_since(t0);
  return r;
}

namespace {

IdentityReport make_eq_report(const std::string& name, const std::string& anchor,
                              const std::string& params, const EnvElement& lhs,
                              const EnvElement& rhs, Exec ex,
                              std::chrono::steady_clock::time_point t0) {
  IdentityReport r;
  r.name = name;
  r.anchor = anchor;
  r.params = params;
  r.lhs_terms = static_cast<long long>(lhs.term_count());
  r.rhs_terms = static_cast<long long>(rhs.term_count());
  r.pass = equals(lhs, rhs, ex);
  r.millis = ms_since(t0);
  return r;
}

}  // namespace

std::vector<IdentityReport> verify_factorization(int n, int p, Exec ex) {
  std::vector<IdentityReport> out;
  std::string params = "n=" + std::to_string(n) + " p=" + std::to_string(p);

  {
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = rectangular_K(n, p, ex);
    EnvElement rhs =
        multiply(capelli_C(n, p - 1), rectangular_K(n, p - 1, ex), ex);
    if ((static_cast<long long>(n) * (p - 1)) % 2) rhs = -rhs;
    out.push_back(
        make_eq_report("unpeel n=" + std::to_string(n) + " p=" + std::to_string(p),
                       "factorization-unpeel", params, lhs, rhs, ex, t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = rectangular_K(n, p, ex);
    EnvElement rhs = EnvElement::one(Context::make(0, n));
    for (int j = p - 1; j >= 0; --j) rhs = multiply(rhs, capelli_C(n, j), ex);
    long long e2 = static_cast<long long>(n) * (static_cast<long long>(p) * (p - 1) / 2);
    if (e2 % 2) rhs = -rhs;
    out.push_back(make_eq_report(
        "product-chain-C n=" + std::to_string(n) + " p=" + std::to_string(p),
        "factorization-product-C", params, lhs, rhs, ex, t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = rectangular_K(n, p, ex);
    EnvElement rhs = EnvElement::one(Context::make(0, n));
    for (int j = p - 1; j >= 0; --j) rhs = multiply(rhs, capelli_H_shift(n, j), ex);
    long long e2 = static_cast<long long>(n) * (static_cast<long long>(p) * (p - 1) / 2);
    if (e2 % 2) rhs = -rhs;
    out.push_back(make_eq_report(
        "product-chain-Hshift n=" + std::to_string(n) + " p=" + std::to_string(p),
        "factorization-product-Hshift", params, lhs, rhs, ex, t0));
  }
  return out;
}

std::vector<IdentityReport> verify_factorization_shape(const Shape& lambda, int n, Exec ex) {
  std::vector<IdentityReport> out;
  const int p = lambda.rows();
  std::string params = "shape=(" + lambda.str() + ") n=" + std::to_string(n);
  ContextPtr ctx = Context::make(0, n);

  {
    // K^lambda = (-1)^{l_p(l_{p-1}+...+l_1)} C_{l_p}(p-1) K^{lambda'}
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = capelli_deruyts(lambda, n, ex);
    std::vector<int> parts = lambda.parts();
    int lp = parts.back();
    parts.pop_back();
    Shape rest(parts);
    EnvElement rhs = multiply(capelli_C_in(ctx, lp, p - 1), capelli_deruyts(rest, n, ex), ex);
    long long e = static_cast<long long>(lp) * rest.weight();
    if (e % 2) rhs = -rhs;
    out.push_back(make_eq_report("unpeel-shape (" + lambda.str() + ")",
                                 "factorization-unpeel-shape", params, lhs, rhs, ex, t0));
  }
  {
    // K^lambda = sign * C_{l_p}(p-1) ... C_{l_1}(0)
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = capelli_deruyts(lambda, n, ex);
    EnvElement rhs = EnvElement::one(ctx);
    long long e = 0;
    for (int i = p - 1; i >= 0; --i) {
      rhs = multiply(rhs, capelli_C_in(ctx, lambda.part(i), i), ex);
      for (int j = 0; j < i; ++j) e += static_cast<long long>(lambda.part(i)) * lambda.part(j);
    }
    if (e % 2) rhs = -rhs;
    out.push_back(make_eq_report("product-chain-C-shape (" + lambda.str() + ")",
                                 "factorization-product-C-shape", params, lhs, rhs, ex, t0));
  }
  {
    // same with the shifted column determinants H_{l_i}(i-1)
    auto t0 = std::chrono::steady_clock::now();
    EnvElement lhs = capelli_deruyts(lambda, n, ex);
    EnvElement rhs = EnvElement::one(ctx);
    long long e = 0;
    for (int i = p - 1; i >= 0; --i) {
      rhs = multiply(rhs, capelli_H_shift_in(ctx, lambda.part(i), i), ex);
      for (int j = 0; j < i; ++j) e += static_cast<long long>(lambda.part(i)) * lambda.part(j);
    }
    if (e % 2) rhs = -rhs;
    out.push_back(make_eq_report("product-chain-Hshift-shape (" + lambda.str() + ")",
                                 "factorization-product-Hshift-shape", params, lhs, rhs, ex, t0));
  }
  return out;
}

IdentityReport verify_centrality(const EnvElement& x, const std::string& name, Exec ex) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport r;
  r.name = "centrality " + name;
  r.anchor = "centrality";
  r.params = name;
  r.lhs_terms = static_cast<long long>(x.term_count());
  r.rhs_terms = r.lhs_terms;
  r.pass = is_central(x, ex);
  r.millis = ms_since(t0);
  return r;
}

}  // namespace ugl
