#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ugl/rational.hpp"

using namespace ugl;

TEST_CASE("integer construction and printing") {
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt(-1).str() == "-1");
  CHECK(BigInt(123456789012345678LL).str() == "123456789012345678");
  CHECK(BigInt::from_string("-987654321098765432109876543210").str() ==
        "-987654321098765432109876543210");
}

TEST_CASE("arithmetic agrees with 64-bit arithmetic on small operands") {
  std::mt19937_64 eng(7);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int i = 0; i < 2000; ++i) {
    long long a = dist(eng), b = dist(eng);
    CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
    CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
    CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
    if (b != 0) {
      BigInt q, r;
      BigInt::divrem(BigInt(a), BigInt(b), q, r);
      CHECK(q.str() == std::to_string(a / b));
      CHECK(r.str() == std::to_string(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
}

TEST_CASE("multi-limb multiplication and division round-trip") {
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<long long> dist(1, 1LL << 62);
  for (int i = 0; i < 200; ++i) {
    BigInt a = BigInt(dist(eng)) * BigInt(dist(eng)) * BigInt(dist(eng));
    BigInt b = BigInt(dist(eng)) * BigInt(dist(eng));
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r < b);
  }
}

TEST_CASE("gcd and factorials") {
  CHECK(gcd(BigInt(48), BigInt(-36)).str() == "12");
  CHECK(gcd(BigInt(0), BigInt(5)).str() == "5");
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(binomial(30, 15).str() == "155117520");
  CHECK(falling_factorial(2, 2).str() == "2");
  CHECK(falling_factorial(1, 2).str() == "0");
  CHECK(falling_factorial(5, 0).str() == "1");
  CHECK(raising_factorial(2, 2).str() == "6");
  CHECK(raising_factorial(3, 0).str() == "1");
  CHECK(raising_factorial(1, 4).str() == "24");
}

TEST_CASE("binomial inversion between falling and raising factorials") {
  // sum_{k=i}^m (-1)^{m-k} (p)_{m-k} <p>_{k-i} C(m-i, k-i) = (m-i)! delta_{m,i};
  // this is the inversion that turns the row-insertion relation into the
  // expansion relation
  for (int p = 0; p <= 6; ++p)
    for (int m = 0; m <= 6; ++m)
      for (int i = 0; i <= m; ++i) {
        BigInt sum(0);
        for (int k = i; k <= m; ++k) {
          BigInt term = falling_factorial(p, m - k) * raising_factorial(p, k - i) *
                        binomial(m - i, k - i);
          if ((m - k) & 1) term.negate();
          sum += term;
        }
        CHECK(sum == (m == i ? factorial(0) : BigInt(0)));
      }
}

TEST_CASE("rationals reduce and order") {
  CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
  CHECK((Rational(1, 1) / Rational(3)).str() == "1/3");
  CHECK((Rational::from_string("2/6") + Rational::from_string("1/6")).str() == "1/2");
  CHECK((Rational(2) * Rational(BigInt(1), BigInt(2))).is_one());
  CHECK(Rational(1) < Rational(BigInt(3), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(3)) < Rational(0));
  std::mt19937_64 eng(3);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (int i = 0; i < 500; ++i) {
    long long a = dist(eng), b = dist(eng), c = dist(eng), d = dist(eng);
    if (b == 0 || d == 0) continue;
    Rational x{BigInt(a), BigInt(b)}, y{BigInt(c), BigInt(d)};
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(-(-x) == x);
  }
}
