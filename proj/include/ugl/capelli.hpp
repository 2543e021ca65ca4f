#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ugl/devirt.hpp"
#include "ugl/poly_over.hpp"
#include "ugl/report.hpp"

namespace ugl {

inline EnvElement operator*(const EnvElement& a, const EnvElement& b) { return multiply(a, b); }
inline EnvElement scale(const EnvElement& x, const Rational& k) { return x.scaled(k); }

using EnvMatrix = std::vector<std::vector<EnvElement>>;
using EnvPoly = PolyOver<EnvElement>;

// column determinant: sum over permutations of sgn * a_{s(1),1} a_{s(2),2} ...
// (factors taken in column order); entries need not commute
template <class T>
T cdet(const std::vector<std::vector<T>>& a) {
  const int k = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("cdet: matrix not square");
  if (k == 0) throw std::invalid_argument("cdet: empty matrix");
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  T sum{};
  do {
    T prod = a[perm[0]][0];
    for (int col = 1; col < k; ++col) prod = prod * a[perm[col]][col];
    int sgn = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    if (sgn > 0)
      sum = sum + prod;
    else
      sum = sum - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// ---- named elements ------------------------------------------------------
// All builders accept the ambient proper dimension n and construct in the
// proper-only context gl(0|n); the *_sub variants build the corner copy of a
// smaller gl inside the same ambient algebra.

// k x k shifted column determinant over the row set `idx` (1-based, increasing)
EnvElement capelli_minor(const ContextPtr& ctx, const std::vector<int>& idx);

// H_n^{(k)}: sum of all shifted k x k principal column determinants; H_n^{(0)} = 1
EnvElement capelli_H(int n, int k);
EnvElement capelli_H_in(const ContextPtr& ctx, int sub_n, int k);

// H_n(p) = cdet[ e_{h,k} + delta(-p + n - h) ]
EnvElement capelli_H_shift(int n, long long p);
EnvElement capelli_H_shift_in(const ContextPtr& ctx, int sub_n, long long p);

// C_n(p) = sum_j (-1)^{n-j} (p)_{n-j} H_n^{(j)}
EnvElement capelli_C(int n, long long p);
EnvElement capelli_C_in(const ContextPtr& ctx, int sub_n, long long p);

// K^lambda = [Der*_lambda | Der_lambda]
EnvElement capelli_deruyts(const Shape& lambda, int n, Exec ex = Exec::parallel);
// K_n^p (rectangular); K_n^0 = 1
EnvElement rectangular_K(int n, int p, Exec ex = Exec::parallel);
// K_lambda(n) = sum over row-increasing S of [S|S]
EnvElement shaped_K(const Shape& lambda, int n, Exec ex = Exec::parallel);
std::vector<Tableau> row_increasing_tableaux(const Shape& lambda, int n);

// H_n(t) = cdet[ e_{i,j} + delta(-t + n - i) ], coefficients in U(gl(n))
EnvPoly capelli_H_poly(int n);
// C_n(s) = cdet[ e_{i,j} + delta(s - i + 1) ]
EnvPoly capelli_C_poly(int n);
// C_n^{(h)}: coefficient of s^{n-h} in C_n(s)
EnvElement capelli_C_coeff(int n, int h);
// same element computed as the sum of h x h principal minors of C_n(0)
EnvElement capelli_C_coeff_minors(int n, int h);

// [K^lambda; J]: bitableau of shape (lambda, |J|) with bottom row J
EnvElement append_rows(const Shape& lambda, const std::vector<int>& J, int n,
                       Exec ex = Exec::parallel);
// [J*|J] one-row bitableau over an index subset
EnvElement subset_bitableau(const std::vector<int>& J, int n, Exec ex = Exec::parallel);

bool equal_env_poly(const EnvPoly& a, const EnvPoly& b, Exec ex = Exec::parallel);

// ---- theorem verifiers ----------------------------------------------------

// [M*|M] K^l = sum_k <p>_{m-k} sum_{J subset M, |J|=k} (-1)^{|l| k} [K^l; J]
IdentityReport verify_row_insertion(const Shape& lambda, const std::vector<int>& M, int n,
                                    Exec ex = Exec::parallel);

// (-1)^{|l| m} [K^l; M] = sum_k (-1)^{m-k} (p)_{m-k} sum_J [J*|J] K^l
IdentityReport verify_expansion(const Shape& lambda, const std::vector<int>& M, int n,
                                Exec ex = Exec::parallel);

// rectangular factorization chain and its general-shape form
std::vector<IdentityReport> verify_factorization(int n, int p, Exec ex = Exec::parallel);
std::vector<IdentityReport> verify_factorization_shape(const Shape& lambda, int n,
                                                       Exec ex = Exec::parallel);

IdentityReport verify_centrality(const EnvElement& x, const std::string& name,
                                 Exec ex = Exec::parallel);

}  // namespace ugl
