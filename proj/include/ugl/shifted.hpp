#pragma once

#include <unordered_map>

#include "ugl/superpoly.hpp"

namespace ugl {

// Multivariate polynomial in x_1..x_n over Q, sparse exponent vectors
// (trailing zeros trimmed so the key is canonical).
class ShiftedPoly {
 public:
  ShiftedPoly() = default;
  explicit ShiftedPoly(int n) : n_(n) {}

  static ShiftedPoly constant(int n, Rational c);
  static ShiftedPoly variable(int n, int i);  // x_i, 1-based

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<std::vector<std::uint32_t>, Rational, MonomialHash>& terms() const {
    return terms_;
  }

  void add_term(std::vector<std::uint32_t> exps, const Rational& c);

  ShiftedPoly operator-() const;
  friend ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b);
  friend ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b);
  friend ShiftedPoly operator*(const ShiftedPoly& a, const ShiftedPoly& b);
  ShiftedPoly& operator+=(const ShiftedPoly& o) { return *this = *this + o; }
  ShiftedPoly scaled(const Rational& k) const;
  friend bool operator==(const ShiftedPoly& a, const ShiftedPoly& b);

  Rational eval(const std::vector<Rational>& x) const;

  // substitute x_i -> x_{sigma(i)} + shift_i (simultaneously)
  ShiftedPoly substitute_affine(const std::vector<int>& target_var,
                                const std::vector<Rational>& shift) const;

  std::vector<std::pair<std::vector<std::uint32_t>, Rational>> sorted_terms() const;

 private:
  int n_ = 0;
  std::unordered_map<std::vector<std::uint32_t>, Rational, MonomialHash> terms_;
};

inline ShiftedPoly scale(const ShiftedPoly& p, const Rational& k) { return p.scaled(k); }

using ShiftedPolyPoly = PolyOver<ShiftedPoly>;  // polynomials in t over Lambda*(n)

// Harish-Chandra image: PBW-order with lowering < Cartan < raising, drop
// words with off-diagonal factors, map e_{i,i} -> x_i. Requires centrality
// (checked unless the caller vouches for it).
ShiftedPoly hc_image(const EnvElement& x, int n, bool check_central = true,
                     Exec ex = Exec::parallel);

// e_k^* = sum_{i_1<...<i_k} (x_{i_1}+k-1)(x_{i_2}+k-2)...(x_{i_k})
ShiftedPoly shifted_elementary(int k, int n);

// f(...,x_i,x_{i+1},...) = f(...,x_{i+1}-1,x_i+1,...) for every i
bool is_shifted_symmetric(const ShiftedPoly& f);

// chi_n(K_n^p) as the signed double product of hook factors
ShiftedPoly hook_product_poly(int n, int p);

// ordinary elementary symmetric e_h(x_1, x_2-1, ..., x_n-(n-1))
ShiftedPoly shifted_arg_elementary(int h, int n);

// h_k(n): sum of k x k principal minors of [(i|j)] in C[M_{n,n}]
SuperPolynomial char_h(int k, int n);

// Koszul image of the shaped element: sum over row-increasing S of (S|S)
SuperPolynomial koszul_shaped(const Shape& lambda, int n);

}  // namespace ugl
