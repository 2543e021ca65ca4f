#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "ugl/capelli.hpp"
#include "ugl/suites.hpp"

using namespace ugl;
using testutil::Rng;

namespace {
Symbol P(int i) { return Symbol::proper(i); }
Symbol V(int s) { return Symbol::virt(s); }
}  // namespace

TEST_CASE("shape invariants") {
  CHECK_THROWS_AS(Shape({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({0}), std::invalid_argument);
  CHECK(Shape({3, 2, 2}).conjugate().parts() == std::vector<int>{3, 3, 1});
  CHECK(Shape({3, 2, 2}).weight() == 7);
}

TEST_CASE("tableau constructors") {
  Shape lam({3, 2, 2});
  CHECK(deruyts(lam, 3).str() == "1 2 3/1 2/1 2");
  CHECK(reverse_deruyts(lam, 3).str() == "3 2 1/2 1/2 1");
  CHECK(deruyts(Shape({1}), 1).str() == "1");
  CHECK(reverse_deruyts(Shape({2, 1}), 2).str() == "2 1/1");
  CHECK_THROWS_AS(deruyts(Shape({4}), 3), std::invalid_argument);

  ContextPtr ctx = Context::make(2, 3);
  VirtualPool pool = VirtualPool::make(ctx, 2);
  CHECK(coderuyts(Shape({2, 1}), pool).str() == "a1 a1/a2");
  CHECK(coderuyts(Shape({3}), pool).str() == "a1 a1 a1");
  CHECK_THROWS_AS(coderuyts(Shape({2, 2, 1}), pool), std::invalid_argument);
}

TEST_CASE("irregularity detector") {
  ContextPtr ctx = Context::make(2, 3);
  // e_{g,j} e_{i,g} e_{j,g} e_{g,i} with g = a1, i = 1, j = 2
  Word w;
  w.push_back(ctx->gen(V(1), P(2)));
  w.push_back(ctx->gen(P(1), V(1)));
  w.push_back(ctx->gen(P(2), V(1)));
  w.push_back(ctx->gen(V(1), P(1)));
  CHECK(is_irregular(*ctx, w));

  Word proper_only;
  proper_only.push_back(ctx->gen(P(1), P(2)));
  proper_only.push_back(ctx->gen(P(2), P(1)));
  CHECK_FALSE(is_irregular(*ctx, proper_only));

  // e_{i,g} e_{g,j}: creation precedes annihilation
  Word ok;
  ok.push_back(ctx->gen(P(1), V(1)));
  ok.push_back(ctx->gen(V(1), P(2)));
  CHECK_FALSE(is_irregular(*ctx, ok));
}

TEST_CASE("devirtualization of the basic contractions") {
  ContextPtr ctx = Context::make(2, 3);
  // p(e_{i,g} e_{g,j}) = e_{i,j}
  Word w;
  w.push_back(ctx->gen(P(1), V(1)));
  w.push_back(ctx->gen(V(1), P(2)));
  EnvElement img = devirtualize(EnvElement::from_word(ctx, w));
  ContextPtr pctx = Context::make(0, 3);
  CHECK(equals(img, EnvElement::generator(pctx, P(1), P(2))));

  // identity on proper words
  Word pw;
  pw.push_back(ctx->gen(P(2), P(1)));
  pw.push_back(ctx->gen(P(1), P(3)));
  EnvElement same = devirtualize(EnvElement::from_word(ctx, pw, Rational(5)));
  Word pw2;
  pw2.push_back(pctx->gen(P(2), P(1)));
  pw2.push_back(pctx->gen(P(1), P(3)));
  CHECK((same - EnvElement::from_word(pctx, pw2, Rational(5))).is_zero());

  // irregular input maps to zero
  Word irr;
  irr.push_back(ctx->gen(V(1), P(2)));
  irr.push_back(ctx->gen(P(1), V(1)));
  irr.push_back(ctx->gen(P(2), V(1)));
  irr.push_back(ctx->gen(V(1), P(1)));
  CHECK(devirtualize(EnvElement::from_word(ctx, irr)).is_zero());

  // a lone creator is outside the virtual subalgebra
  Word creator;
  creator.push_back(ctx->gen(V(1), P(1)));
  CHECK_THROWS_AS(devirtualize(EnvElement::from_word(ctx, creator)), std::domain_error);
}

TEST_CASE("one-row devirtualization equals the shifted column determinant at n=2") {
  // p(e_{2,a} e_{1,a} e_{a,1} e_{a,2}) = (e_{1,1}+1) e_{2,2} - e_{2,1} e_{1,2}
  ContextPtr ctx = Context::make(1, 2);
  Word w;
  w.push_back(ctx->gen(P(2), V(1)));
  w.push_back(ctx->gen(P(1), V(1)));
  w.push_back(ctx->gen(V(1), P(1)));
  w.push_back(ctx->gen(V(1), P(2)));
  EnvElement img = devirtualize(EnvElement::from_word(ctx, w));
  CHECK(equals(img, capelli_H(2, 2)));
}

TEST_CASE("bitableau monomials") {
  ContextPtr ctx = Context::make(2, 2);
  Shape lam({2, 1});
  Tableau S = reverse_deruyts(lam, 2);
  VirtualPool pool = VirtualPool::make(ctx, 2);
  Tableau C = coderuyts(lam, pool);
  EnvElement mono = bitableau_monomial(ctx, S, C);
  Word expect;
  expect.push_back(ctx->gen(P(2), V(1)));
  expect.push_back(ctx->gen(P(1), V(1)));
  expect.push_back(ctx->gen(P(1), V(2)));
  CHECK((mono - EnvElement::from_word(ctx, expect)).is_zero());

  Tableau single_s, single_t;
  single_s.rows.push_back({P(1)});
  single_t.rows.push_back({P(2)});
  EnvElement cell = bitableau_monomial(ctx, single_s, single_t);
  CHECK((cell - EnvElement::generator(ctx, P(1), P(2))).is_zero());

  Tableau wrong;
  wrong.rows.push_back({P(1), P(2)});
  CHECK_THROWS_AS(bitableau_monomial(ctx, single_s, wrong), std::invalid_argument);
}

TEST_CASE("the (3,2,2) bitableau monomial reads the rows left to right") {
  Shape lam({3, 2, 2});
  ContextPtr ctx = Context::make(3, 3);
  VirtualPool pool = VirtualPool::make(ctx, 3);
  Tableau cod = coderuyts(lam, pool);
  EnvElement left = bitableau_monomial(ctx, reverse_deruyts(lam, 3), cod);
  EnvElement right = bitableau_monomial(ctx, cod, deruyts(lam, 3));
  // e_{3,a1} e_{2,a1} e_{1,a1} e_{2,a2} e_{1,a2} e_{2,a3} e_{1,a3}
  Word lw;
  int lrows[3][3] = {{3, 2, 1}, {2, 1, 0}, {2, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3 && lrows[r][c]; ++c)
      lw.push_back(ctx->gen(P(lrows[r][c]), V(r + 1)));
  CHECK((left - EnvElement::from_word(ctx, lw)).is_zero());
  // e_{a1,1} e_{a1,2} e_{a1,3} e_{a2,1} e_{a2,2} e_{a3,1} e_{a3,2}
  Word rw;
  int rrows[3][3] = {{1, 2, 3}, {1, 2, 0}, {1, 2, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3 && rrows[r][c]; ++c)
      rw.push_back(ctx->gen(V(r + 1), P(rrows[r][c])));
  CHECK((right - EnvElement::from_word(ctx, rw)).is_zero());
}

TEST_CASE("capelli bitableau single cell and one-row cases") {
  ContextPtr ctx = Context::make(1, 3);
  VirtualPool pool = VirtualPool::make(ctx, 1);
  Tableau S, T;
  S.rows.push_back({P(2)});
  T.rows.push_back({P(3)});
  EnvElement cell = capelli_bitableau(S, T, pool);
  CHECK(equals(cell, EnvElement::generator(Context::make(0, 3), P(2), P(3))));

  // [n...21|12...n] = H_n^{(n)} for n = 1, 2, 3
  for (int n = 1; n <= 3; ++n) CHECK(equals(rectangular_K(n, 1), capelli_H(n, n)));
}

TEST_CASE("one-row bitableaux over index subsets match shifted minors") {
  // [i_k...i_1 | i_1...i_k] equals the k x k shifted column determinant
  ContextPtr pctx = Context::make(0, 3);
  std::vector<int> idx{1, 3};
  CHECK(equals(subset_bitableau(idx, 3), capelli_minor(pctx, idx)));
  std::vector<int> idx2{2};
  CHECK(equals(subset_bitableau(idx2, 3), capelli_minor(pctx, idx2)));
}

TEST_CASE("pool independence of Capelli bitableaux") {
  for (int n = 2; n <= 3; ++n)
    for (const Shape& lam : partitions_up_to(n, 5)) {
      int p = lam.rows();
      ContextPtr ctx = Context::make(2 * p, n);
      VirtualPool pool1 = VirtualPool::make(ctx, p, 1);
      VirtualPool pool2 = VirtualPool::make(ctx, p, p + 1);
      Tableau S = reverse_deruyts(lam, n), T = deruyts(lam, n);
      CHECK(equals(capelli_bitableau(S, T, pool1), capelli_bitableau(S, T, pool2)));
    }
}

TEST_CASE("well-definedness of the (3,2,2) bitableau across pools") {
  Shape lam({3, 2, 2});
  ContextPtr ctx = Context::make(6, 3);
  VirtualPool pool1 = VirtualPool::make(ctx, 3, 1);
  VirtualPool pool2 = VirtualPool::make(ctx, 3, 4);
  Tableau S = reverse_deruyts(lam, 3), T = deruyts(lam, 3);
  EnvElement a = capelli_bitableau(S, T, pool1);
  EnvElement b = capelli_bitableau(S, T, pool2);
  CHECK_FALSE(a.is_zero());
  CHECK(equals(a, b));
}

TEST_CASE("devirtualization is equivariant for the proper adjoint action") {
  ContextPtr ctx = Context::make(3, 3);
  ContextPtr pctx = Context::make(0, 3);
  Rng rng(515151);
  for (int trial = 0; trial < 80; ++trial) {
    // random balanced monomial with <= 3 pairs
    int k = rng.uniform(1, 3);
    Word w;
    std::vector<int> gs;
    for (int t = 0; t < k; ++t) gs.push_back(rng.uniform(1, 3));
    for (int t = 0; t < k; ++t) w.push_back(ctx->gen(P(rng.uniform(1, 3)), V(gs[t])));
    for (int t = 0; t < k; ++t) w.push_back(ctx->gen(V(gs[t]), P(rng.uniform(1, 3))));
    EnvElement x = EnvElement::from_word(ctx, w, rng.coeff());
    int i = rng.uniform(1, 3), j = rng.uniform(1, 3);
    EnvElement lhs = devirtualize(adjoint_T(ctx, ctx->gen(P(i), P(j)), x));
    EnvElement rhs = adjoint_T(pctx, pctx->gen(P(i), P(j)), devirtualize(x));
    CHECK(equals(lhs, rhs));
  }
}

TEST_CASE("left multiples of irregular words die under devirtualization") {
  ContextPtr ctx = Context::make(3, 3);
  Rng rng(626262);
  for (int trial = 0; trial < 80; ++trial) {
    Word w = testutil::random_word(rng, *ctx, 2, true);
    w.push_back(ctx->gen(P(rng.uniform(1, 3)), V(rng.uniform(1, 3))));
    int tail = rng.uniform(0, 2);
    for (int t = 0; t < tail; ++t) w.push_back(testutil::random_proper_gen(rng, *ctx));
    Word full = concat(testutil::random_word(rng, *ctx, 2, true), w);
    REQUIRE(is_irregular(*ctx, full));
    CHECK(devirtualize(EnvElement::from_word(ctx, full, rng.coeff())).is_zero());
  }
}

TEST_CASE("raising factorial absorption lemma") {
  for (const Shape& lam : {Shape({2, 1}), Shape({2, 2}), Shape({3, 2}), Shape({3, 2, 2})}) {
    int n = lam.part(0), p = lam.rows();
    ContextPtr ctx = Context::make(p + 1, n);
    VirtualPool pool = VirtualPool::make(ctx, p);
    Symbol alpha = V(p + 1);
    EnvElement Mstar = bitableau_monomial(ctx, reverse_deruyts(lam, n), coderuyts(lam, pool));
    for (int k = 0; k <= std::min(2, lam.last_part()); ++k) {
      std::vector<int> A;
      for (int i = 1; i <= k; ++i) A.push_back(i);
      EnvElement cur = Mstar;
      for (auto it = A.rbegin(); it != A.rend(); ++it)
        cur = adjoint_T(ctx, ctx->gen(alpha, P(*it)), cur);
      for (int a : A) cur = adjoint_T(ctx, ctx->gen(P(a), alpha), cur);
      CHECK(equals(cur, Mstar.scaled(Rational(raising_factorial(p, k)))));
    }
  }
}
