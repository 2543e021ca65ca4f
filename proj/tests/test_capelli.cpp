#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "ugl/capelli.hpp"
#include "ugl/suites.hpp"

using namespace ugl;

namespace {
Symbol P(int i) { return Symbol::proper(i); }

EnvElement E(const ContextPtr& ctx, int i, int j) {
  return EnvElement::generator(ctx, P(i), P(j));
}
}  // namespace

TEST_CASE("column determinant on small matrices") {
  ContextPtr ctx = Context::make(0, 2);
  EnvElement a = E(ctx, 1, 1), b = E(ctx, 1, 2), c = E(ctx, 2, 1), d = E(ctx, 2, 2);
  CHECK((cdet<EnvElement>({{a}}) - a).is_zero());
  // cdet[[a,b],[c,d]] = ad - cb (column order)
  EnvElement m = cdet<EnvElement>({{a, b}, {c, d}});
  CHECK((m - (multiply(a, d) - multiply(c, b))).is_zero());
  // the shifted 2x2 Capelli determinant
  EnvElement h22 = capelli_H(2, 2);
  EnvElement expect = multiply(a + EnvElement::one(ctx), d) - multiply(c, b);
  CHECK((h22 - expect).is_zero());
}

TEST_CASE("classical Capelli sums") {
  ContextPtr ctx1 = Context::make(0, 1);
  CHECK((capelli_H(1, 1) - E(ctx1, 1, 1)).is_zero());
  ContextPtr ctx2 = Context::make(0, 2);
  CHECK((capelli_H(2, 1) - (E(ctx2, 1, 1) + E(ctx2, 2, 2))).is_zero());
  CHECK(capelli_H(3, 0).term_count() == 1);  // the unit
  CHECK_THROWS_AS(capelli_H(2, 3), std::invalid_argument);
}

TEST_CASE("shifted column determinants H_n(p)") {
  // H_n(0) = H_n^(n)
  for (int n = 1; n <= 3; ++n) CHECK(equals(capelli_H_shift(n, 0), capelli_H(n, n)));
  ContextPtr ctx1 = Context::make(0, 1);
  CHECK(equals(capelli_H_shift(1, 3), E(ctx1, 1, 1) - EnvElement::one(ctx1).scaled(Rational(3))));
  // H_2(1) expanded by hand: e11 e22 - e11 - e21 e12
  ContextPtr ctx2 = Context::make(0, 2);
  EnvElement byhand = multiply(E(ctx2, 1, 1), E(ctx2, 2, 2)) - E(ctx2, 1, 1) -
                      multiply(E(ctx2, 2, 1), E(ctx2, 1, 2));
  CHECK(equals(capelli_H_shift(2, 1), byhand));
}

TEST_CASE("the C-combination of Capelli generators") {
  for (int n = 1; n <= 3; ++n) CHECK(equals(capelli_C(n, 0), capelli_H(n, n)));
  // C_3(1) = H_3^(3) - H_3^(2)
  CHECK(equals(capelli_C(3, 1), capelli_H(3, 3) - capelli_H(3, 2)));
  // the two construction routes agree: C_n(p) = H_n(p)
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 3; ++p) CHECK(equals(capelli_C(n, p), capelli_H_shift(n, p)));
}

TEST_CASE("triangular change of basis between the C and H families") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p < n; ++p) {
      EnvElement recon(Context::make(0, n));
      for (int j = 0; j <= n; ++j) {
        Rational coef = Rational(falling_factorial(p, n - j));
        if ((n - j) & 1) coef = -coef;
        if ((n - j) > p) CHECK(coef.is_zero());  // strictly triangular
        if (j == n) CHECK(coef.is_one());        // unit leading entry
        recon += capelli_H(n, j).scaled(coef);
      }
      CHECK(equals(recon, capelli_C(n, p)));
    }
  }
}

TEST_CASE("Capelli sums as one-row bitableaux over index subsets") {
  // H_n^(k) = sum over i_1 < ... < i_k of [i_k...i_1 | i_1...i_k]
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      EnvElement sum(Context::make(0, n));
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i + 1;
      while (true) {
        sum += subset_bitableau(idx, n);
        int j = k - 1;
        while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      }
      CHECK(equals(sum, capelli_H(n, k)));
    }
}

TEST_CASE("Capelli-Deruyts bitableaux") {
  // K_n^0 = 1
  CHECK(rectangular_K(3, 0).term_count() == 1);
  // the K_3^2 display
  EnvElement K32 = rectangular_K(3, 2);
  EnvElement rhs = multiply(capelli_H(3, 2) - capelli_H(3, 3), capelli_H(3, 3));
  CHECK(equals(K32, rhs));
  CHECK_THROWS_AS(capelli_deruyts(Shape({4}), 3), std::invalid_argument);
}

TEST_CASE("shaped central elements") {
  // K_{(1)}(n) = sum of e_ii = H_n^(1)
  for (int n = 1; n <= 3; ++n) CHECK(equals(shaped_K(Shape({1}), n), capelli_H(n, 1)));
  CHECK(row_increasing_tableaux(Shape({3}), 3).size() == 1);
  CHECK(row_increasing_tableaux(Shape({2, 1}), 3).size() == 9);
  // K_{(n)}(n) = [1..n|1..n] differs from [n..1|1..n] by the row-reversal sign
  for (int n = 2; n <= 3; ++n) {
    EnvElement kk = shaped_K(Shape({n}), n);
    Rational sgn((n * (n - 1) / 2) % 2 ? -1 : 1);
    CHECK(equals(kk, capelli_H(n, n).scaled(sgn)));
  }
}

TEST_CASE("polynomial determinants and coefficient extraction") {
  // H_1(t) = e11 - t
  EnvPoly h1 = capelli_H_poly(1);
  ContextPtr ctx1 = Context::make(0, 1);
  CHECK(h1.degree() == 1);
  CHECK(equals(h1.coeff(0), E(ctx1, 1, 1)));
  CHECK(equals(h1.coeff(1), EnvElement::one(ctx1).scaled(Rational(-1))));

  // n=2: H_2(t) = H_2^(2) - H_2^(1) (t)_1 + (t)_2
  EnvPoly h2 = capelli_H_poly(2);
  ContextPtr ctx2 = Context::make(0, 2);
  EnvPoly rhs(capelli_H(2, 2));
  {
    ScalarPoly t1 = falling_factorial_poly(1), t2 = falling_factorial_poly(2);
    EnvElement h21 = capelli_H(2, 1).scaled(Rational(-1));
    for (int k = 0; k <= t1.degree(); ++k)
      rhs = rhs + EnvPoly::monomial(h21.scaled(t1.coeff(k)), k);
    for (int k = 0; k <= t2.degree(); ++k)
      rhs = rhs + EnvPoly::monomial(EnvElement::one(ctx2).scaled(t2.coeff(k)), k);
  }
  CHECK(equal_env_poly(h2, rhs));

  // coefficient route vs minor-sum route; C_2^{(1)} = e11 + e22 - 1
  CHECK(equals(capelli_C_coeff(2, 1), capelli_C_coeff_minors(2, 1)));
  CHECK(equals(capelli_C_coeff(2, 1), E(ctx2, 1, 1) + E(ctx2, 2, 2) - EnvElement::one(ctx2)));
  CHECK(equals(capelli_C_coeff(3, 2), capelli_C_coeff_minors(3, 2)));

  // C_n(s) = H_n(-s + (n-1))
  for (int n = 1; n <= 3; ++n)
    CHECK(equal_env_poly(capelli_C_poly(n),
                         capelli_H_poly(n).compose_affine(Rational(-1), Rational(n - 1))));

  // canceling polynomials leave no zero leading coefficient behind
  CHECK((h1 - h1).degree() == -1);
  CHECK((h1 - h1).is_zero());
}

TEST_CASE("appended bottom rows") {
  Shape lam({3, 2});
  CHECK(equals(append_rows(lam, {}, 3), capelli_deruyts(lam, 3)));
  CHECK(equals(append_rows(lam, {1, 2}, 3), capelli_deruyts(Shape({3, 2, 2}), 3)));
  CHECK_THROWS_AS(append_rows(lam, {3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(append_rows(lam, {2, 1}, 3), std::invalid_argument);
}

TEST_CASE("row insertion on the smallest grids") {
  CHECK(verify_row_insertion(Shape({2, 1}), {}, 2).pass);
  CHECK(verify_row_insertion(Shape({2, 1}), {1}, 2).pass);
  CHECK(verify_row_insertion(Shape({2, 2}), {1, 2}, 2).pass);
  IdentityReport rep = verify_row_insertion(Shape({3, 2}), {1, 2}, 3);
  CHECK(rep.pass);
  CHECK(rep.note.find("6,2,2,1") != std::string::npos);
}

TEST_CASE("expansion on the smallest grids") {
  CHECK(verify_expansion(Shape({2, 1}), {1}, 2).pass);
  CHECK(verify_expansion(Shape({2, 2}), {1}, 2).pass);
  IdentityReport rep = verify_expansion(Shape({3, 2}), {1, 2}, 3);
  CHECK(rep.pass);
  CHECK(rep.note.find("2,-2,-2,1") != std::string::npos);
}

TEST_CASE("factorization identities at small parameters") {
  for (auto& r : verify_factorization(1, 1)) CHECK(r.pass);
  for (auto& r : verify_factorization(2, 2)) CHECK(r.pass);
  for (auto& r : verify_factorization(4, 2)) CHECK(r.pass);  // beyond the default grid
  for (auto& r : verify_factorization_shape(Shape({3, 2}), 3)) CHECK(r.pass);
  // K_1^1 = e11 = C_1(0)
  ContextPtr ctx1 = Context::make(0, 1);
  CHECK(equals(rectangular_K(1, 1), E(ctx1, 1, 1)));
  CHECK(equals(capelli_C(1, 0), E(ctx1, 1, 1)));
}

TEST_CASE("centrality checks") {
  CHECK(is_central(capelli_H(2, 2)));
  CHECK_FALSE(is_central(E(Context::make(0, 2), 1, 2)));
  CHECK(is_central(shaped_K(Shape({2, 1}), 3)));
  CHECK(verify_centrality(capelli_H_shift(2, 1), "Hshift(2,1)").pass);
}

TEST_CASE("filtration leading terms: shaped elements vs products of Capelli sums") {
  // the top-degree words of K_lambda(n) match those of H_n^{(l_1)}...H_n^{(l_p)}
  // up to one global sign
  for (int n = 2; n <= 3; ++n) {
    for (const Shape& lam : partitions_up_to(n, 4)) {
      EnvElement K = pbw_normal_form(shaped_K(lam, n));
      EnvElement Hprod = EnvElement::one(Context::make(0, n));
      for (int i = 0; i < lam.rows(); ++i) Hprod = multiply(Hprod, capelli_H(n, lam.part(i)));
      Hprod = pbw_normal_form(Hprod);
      std::size_t top = lam.weight();
      EnvElement ktop(K.context()), htop(Hprod.context());
      for (const auto& [w, c] : K.terms())
        if (w.size() == top) ktop.add_term(w, c);
      for (const auto& [w, c] : Hprod.terms())
        if (w.size() == top) htop.add_term(w, c);
      REQUIRE_FALSE(ktop.is_zero());
      bool plus = (ktop - htop).is_zero();
      bool minus = (ktop + htop).is_zero();
      CHECK((plus || minus));
    }
  }
}
