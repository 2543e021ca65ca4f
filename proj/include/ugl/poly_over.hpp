#pragma once

#include <vector>

#include "ugl/rational.hpp"

namespace ugl {

// Dense polynomial in one central formal variable with coefficients in an
// arbitrary ring R (R needs +, -, *, is_zero, and scale(R, Rational)).
template <class R>
class PolyOver {
 public:
  PolyOver() = default;
  explicit PolyOver(R constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }

  static PolyOver monomial(R coeff, int power) {
    PolyOver p;
    if (coeff.is_zero()) return p;
    p.c_.resize(power + 1);
    p.c_[power] = std::move(coeff);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const R& coeff(int k) const { return c_[k]; }
  R coeff_or_zero(int k) const { return k <= degree() ? c_[k] : R(); }
  const std::vector<R>& coeffs() const { return c_; }

  friend PolyOver operator+(const PolyOver& a, const PolyOver& b) {
    PolyOver r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
      if (i < b.c_.size()) r.c_[i] = r.c_[i] + b.c_[i];
    }
    r.trim();
    return r;
  }
  friend PolyOver operator-(const PolyOver& a, const PolyOver& b) {
    PolyOver r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
      if (i < b.c_.size()) r.c_[i] = r.c_[i] - b.c_[i];
    }
    r.trim();
    return r;
  }
  friend PolyOver operator*(const PolyOver& a, const PolyOver& b) {
    PolyOver r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  PolyOver scaled(const Rational& k) const {
    PolyOver r;
    if (k.is_zero()) return r;
    for (const R& x : c_) r.c_.push_back(scale(x, k));
    return r;
  }

  // substitute var -> a*var' + b
  PolyOver compose_affine(const Rational& a, const Rational& b) const {
    PolyOver result;
    PolyOver lin;  // a*var + b as R-polynomial needs R(1); build by scaling powers instead
    // (a*s + b)^k expanded with binomials, applied to each coefficient
    for (int k = 0; k <= degree(); ++k) {
      if (c_[k].is_zero()) continue;
      // (a s + b)^k = sum_j C(k,j) a^j b^{k-j} s^j
      Rational apow(1);
      for (int j = 0; j <= k; ++j) {
        Rational bpow(1);
        for (int t = 0; t < k - j; ++t) bpow *= b;
        Rational coef = Rational(binomial(k, j)) * apow * bpow;
        result = result + PolyOver::monomial(scale(c_[k], coef), j);
        apow *= a;
      }
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

// scalar polynomials in one variable
using ScalarPoly = PolyOver<Rational>;

inline Rational scale(const Rational& r, const Rational& k) { return r * k; }

// (t)_k = t(t-1)...(t-k+1) as a scalar polynomial
ScalarPoly falling_factorial_poly(int k);

}  // namespace ugl
