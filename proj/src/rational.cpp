#include "ugl/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace ugl {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long u =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
  mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
  if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt BigInt::from_string(std::string_view s) {
  BigInt r;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (neg) r.negate();
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  unsigned long long u = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
  return sign_ > 0 ? u <= 0x7fffffffffffffffULL : u <= 0x8000000000000000ULL;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value exceeds int64");
  unsigned long long u = 0;
  if (!mag_.empty()) u = mag_[0];
  if (mag_.size() == 2) u |= static_cast<unsigned long long>(mag_[1]) << 32;
  return sign_ < 0 ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.negate();
  return r;
}

BigInt& BigInt::negate() {
  sign_ = -sign_;
  return *this;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> r(hi.size() + 1, 0);
  unsigned long long carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  long long borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long d = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (d < 0) {
      d += 1LL << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (std::size_t i = 0; i < a.mag_.size(); ++i) {
    unsigned long long carry = 0;
    for (std::size_t j = 0; j < b.mag_.size(); ++j) {
      unsigned long long cur = r.mag_[i + j] + carry +
                               static_cast<unsigned long long>(a.mag_[i]) * b.mag_[j];
      r.mag_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.trim();
  return r;
}

namespace {

int top_bit(const std::vector<std::uint32_t>& m) {
  if (m.empty()) return -1;
  std::uint32_t hi = m.back();
  int b = 0;
  while (hi >>= 1) ++b;
  return static_cast<int>(m.size() - 1) * 32 + b;
}

bool get_bit(const std::vector<std::uint32_t>& m, int i) {
  return (m[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1u;
}

}  // namespace

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (a.sign_ == 0) return;
  if (cmp_mag(a.mag_, b.mag_) < 0) {
    r = a;
    return;
  }
  // Bitwise long division on magnitudes; fine at the limb counts seen here.
  std::vector<std::uint32_t> quot(a.mag_.size(), 0), rem;
  for (int i = top_bit(a.mag_); i >= 0; --i) {
    // rem = rem*2 + bit
    std::uint32_t carry = get_bit(a.mag_, i) ? 1u : 0u;
    for (auto& limb : rem) {
      std::uint32_t nc = limb >> 31;
      limb = (limb << 1) | carry;
      carry = nc;
    }
    if (carry) rem.push_back(carry);
    if (cmp_mag(rem, b.mag_) >= 0) {
      rem = sub_mag(rem, b.mag_);
      quot[static_cast<std::size_t>(i) / 32] |= 1u << (i % 32);
    }
  }
  q.mag_ = std::move(quot);
  q.trim();
  if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
  r.mag_ = std::move(rem);
  r.trim();
  if (!r.mag_.empty()) r.sign_ = a.sign_;
}

BigInt BigInt::operator/(const BigInt& b) const {
  BigInt q, r;
  divrem(*this, b, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
  BigInt q, r;
  divrem(*this, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::string digits;
  BigInt cur = *this;
  cur.sign_ = 1;
  BigInt q, r, billion(1000000000);
  while (!cur.is_zero()) {
    BigInt::divrem(cur, billion, q, r);
    long long chunk = r.is_zero() ? 0 : r.to_int64();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

BigInt gcd(BigInt a, BigInt b) {
  if (a.sign() < 0) a.negate();
  if (b.sign() < 0) b.negate();
  while (!b.is_zero()) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt r(1);
  for (int i = 1; i <= k; ++i) r = r * BigInt(n - k + i) / BigInt(i);
  return r;
}

BigInt factorial(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

BigInt falling_factorial(long long p, int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= BigInt(p - i);
  return r;
}

BigInt raising_factorial(long long p, int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= BigInt(p + i);
  return r;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_.negate();
    den_.negate();
  }
  BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_.negate();
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    Rational r;
    r.num_ = a.num_ + b.num_;
    return r;
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.den_.is_one() && b.den_.is_one()) {
    Rational r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num() * b.den() < b.num() * a.den();
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace ugl
