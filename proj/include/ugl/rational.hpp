#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ugl {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
// Small values (the overwhelmingly common case here) stay in one or two
// limbs; nothing in the engine assumes any fixed width.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const;

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws if out of range

  BigInt operator-() const;
  BigInt& negate();

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Quotient truncated toward zero; remainder has the dividend's sign.
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& b) const;
  BigInt operator%(const BigInt& b) const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  std::string str() const;

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();

  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> mag_;   // empty iff zero
};

BigInt gcd(BigInt a, BigInt b);
BigInt binomial(int n, int k);
BigInt factorial(int n);

// (p)_k = p(p-1)...(p-k+1)
BigInt falling_factorial(long long p, int k);
// <p>_k = p(p+1)...(p+k-1)
BigInt raising_factorial(long long p, int k);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact rational with always-reduced representation, positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  static Rational from_string(std::string_view s);  // "a" or "a/b"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  void reduce();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace ugl
