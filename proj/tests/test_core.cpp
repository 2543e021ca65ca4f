#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace ugl;
using testutil::Rng;

namespace {

EnvElement gen(const ContextPtr& ctx, Symbol a, Symbol b) {
  return EnvElement::generator(ctx, a, b);
}
Symbol P(int i) { return Symbol::proper(i); }
Symbol V(int s) { return Symbol::virt(s); }

}  // namespace

TEST_CASE("superbracket on the displayed cases") {
  ContextPtr ctx = Context::make(1, 4);
  // [e_{1,2}, e_{2,1}] = e_{1,1} - e_{2,2}
  EnvElement b = superbracket(ctx, ctx->gen(P(1), P(2)), ctx->gen(P(2), P(1)));
  CHECK(equals(b, gen(ctx, P(1), P(1)) - gen(ctx, P(2), P(2))));
  // [e_{1,a}, e_{a,2}] = e_{1,2}
  EnvElement c = superbracket(ctx, ctx->gen(P(1), V(1)), ctx->gen(V(1), P(2)));
  CHECK(equals(c, gen(ctx, P(1), P(2))));
  // disjoint indices commute
  CHECK(superbracket(ctx, ctx->gen(P(1), P(2)), ctx->gen(P(3), P(4))).is_zero());
  // odd-odd: [e_{1,a}, e_{a,1}] = e_{1,1} + e_{a,a}
  EnvElement d = superbracket(ctx, ctx->gen(P(1), V(1)), ctx->gen(V(1), P(1)));
  CHECK(equals(d, gen(ctx, P(1), P(1)) + gen(ctx, V(1), V(1))));
}

TEST_CASE("multiplication is free bilinear concatenation") {
  ContextPtr ctx = Context::make(0, 2);
  EnvElement one = EnvElement::one(ctx);
  EnvElement x = gen(ctx, P(1), P(2));
  CHECK((multiply(one, x) - x).is_zero());
  CHECK((multiply(x, one) - x).is_zero());
  EnvElement lhs = multiply(x.scaled(Rational(2)), gen(ctx, P(2), P(1)).scaled(Rational(3)));
  Word w;
  w.push_back(ctx->gen(P(1), P(2)));
  w.push_back(ctx->gen(P(2), P(1)));
  CHECK((lhs - EnvElement::from_word(ctx, w, Rational(6))).is_zero());
  // distributivity
  EnvElement sum = multiply(gen(ctx, P(1), P(2)) + gen(ctx, P(2), P(1)), gen(ctx, P(1), P(1)));
  CHECK(sum.term_count() == 2);
}

TEST_CASE("normal form of the displayed words") {
  ContextPtr ctx = Context::make(1, 2);
  // e_{2,1} e_{1,2} is already normal (lowering < raising)
  Word sorted;
  sorted.push_back(ctx->gen(P(2), P(1)));
  sorted.push_back(ctx->gen(P(1), P(2)));
  CHECK(is_normal_word(*ctx, sorted));
  EnvElement x = EnvElement::from_word(ctx, sorted);
  CHECK((pbw_normal_form(x) - x).is_zero());

  // e_{1,2} e_{2,1} -> e_{2,1} e_{1,2} + e_{1,1} - e_{2,2}
  Word unsorted;
  unsorted.push_back(ctx->gen(P(1), P(2)));
  unsorted.push_back(ctx->gen(P(2), P(1)));
  EnvElement nf = pbw_normal_form(EnvElement::from_word(ctx, unsorted));
  EnvElement expect = x + gen(ctx, P(1), P(1)) - gen(ctx, P(2), P(2));
  CHECK((nf - expect).is_zero());

  // odd generator squares to zero
  Word sq;
  sq.push_back(ctx->gen(P(1), V(1)));
  sq.push_back(ctx->gen(P(1), V(1)));
  CHECK(pbw_normal_form(EnvElement::from_word(ctx, sq)).is_zero());
}

TEST_CASE("equality oracle") {
  ContextPtr ctx = Context::make(0, 2);
  EnvElement x = gen(ctx, P(1), P(1));
  CHECK(equals(x, x));
  CHECK_FALSE(equals(x, gen(ctx, P(2), P(2))));
  Word ab, ba;
  ab.push_back(ctx->gen(P(1), P(2)));
  ab.push_back(ctx->gen(P(2), P(1)));
  ba.push_back(ctx->gen(P(2), P(1)));
  ba.push_back(ctx->gen(P(1), P(2)));
  CHECK(equals(EnvElement::from_word(ctx, ab),
               EnvElement::from_word(ctx, ba) + gen(ctx, P(1), P(1)) - gen(ctx, P(2), P(2))));
}

TEST_CASE("adjoint operator basics") {
  ContextPtr ctx = Context::make(1, 2);
  GenId a = ctx->gen(P(1), P(2));
  CHECK(pbw_normal_form(adjoint_T(ctx, a, EnvElement::one(ctx))).is_zero());
  // T_a(b) = [a, b]
  EnvElement tb = adjoint_T(ctx, a, gen(ctx, P(2), P(1)));
  CHECK(equals(tb, gen(ctx, P(1), P(1)) - gen(ctx, P(2), P(2))));
  // odd a on itself: aN + Na with N = a gives 2a^2 = 0
  GenId odd = ctx->gen(P(1), V(1));
  CHECK(pbw_normal_form(adjoint_T(ctx, odd, gen(ctx, P(1), V(1)))).is_zero());
}

TEST_CASE("signed splits: frozen examples and brute-force sign oracle") {
  auto s1 = signed_splits<int>({1, 2}, 1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].left == std::vector<int>{1});
  CHECK(s1[0].sign == 1);
  CHECK(s1[1].left == std::vector<int>{2});
  CHECK(s1[1].sign == -1);

  auto s0 = signed_splits<int>({1, 2, 3}, 0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].right == std::vector<int>{1, 2, 3});
  CHECK(s0[0].sign == 1);

  auto s2 = signed_splits<int>({1, 2, 3}, 2);
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].left == std::vector<int>{1, 2});
  CHECK(s2[0].sign == 1);
  CHECK(s2[1].left == std::vector<int>{1, 3});
  CHECK(s2[1].sign == -1);
  CHECK(s2[2].left == std::vector<int>{2, 3});
  CHECK(s2[2].sign == 1);

  CHECK_THROWS(signed_splits<int>({1, 1}, 1));

  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int mlen = rng.uniform(1, 7);
    std::vector<int> seq;
    for (int i = 0; i < mlen; ++i) seq.push_back(i + 10);
    std::shuffle(seq.begin(), seq.end(), rng.eng);
    int k = rng.uniform(0, mlen);
    for (const auto& s : signed_splits<int>(seq, k)) {
      std::vector<int> rearranged = s.left;
      rearranged.insert(rearranged.end(), s.right.begin(), s.right.end());
      CHECK(s.sign == testutil::permutation_sign_oracle(seq, rearranged));
    }
  }
}

TEST_CASE("super antisymmetry and Jacobi on random generators of gl(2|3)") {
  ContextPtr ctx = Context::make(2, 3);
  Rng rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    GenId a = testutil::random_gen(rng, *ctx), b = testutil::random_gen(rng, *ctx),
          c = testutil::random_gen(rng, *ctx);
    EnvElement ab = superbracket(ctx, a, b);
    EnvElement ba = superbracket(ctx, b, a);
    CHECK(pbw_normal_form(ab + (ctx->swap_sign(a, b) < 0 ? -ba : ba)).is_zero());

    EnvElement ea = EnvElement::generator(ctx, a), eb = EnvElement::generator(ctx, b),
               ec = EnvElement::generator(ctx, c);
    EnvElement lhs = superbracket(ea, superbracket(eb, ec));
    EnvElement r1 = superbracket(superbracket(ea, eb), ec);
    EnvElement r2 = superbracket(eb, superbracket(ea, ec));
    if (ctx->swap_sign(a, b) < 0) r2 = -r2;
    CHECK(pbw_normal_form(lhs - r1 - r2).is_zero());
  }
}

TEST_CASE("PBW soundness, idempotence, derivation and composition laws") {
  ContextPtr ctx = Context::make(1, 2);
  Rng rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    EnvElement x = testutil::random_element(rng, ctx, 3, 3);
    EnvElement y = testutil::random_element(rng, ctx, 3, 3);
    CHECK(equals(pbw_normal_form(multiply(x, y)),
                 pbw_normal_form(multiply(pbw_normal_form(x), pbw_normal_form(y)))));
    EnvElement nf = pbw_normal_form(x);
    CHECK((pbw_normal_form(nf) - nf).is_zero());

    GenId a = testutil::random_gen(rng, *ctx);
    Word wx = testutil::random_word(rng, *ctx, 3), wy = testutil::random_word(rng, *ctx, 3);
    EnvElement hx = EnvElement::from_word(ctx, wx), hy = EnvElement::from_word(ctx, wy);
    EnvElement lhs = adjoint_T(ctx, a, multiply(hx, hy));
    EnvElement second = multiply(hx, adjoint_T(ctx, a, hy));
    if (ctx->gen_parity(a) && wx.parity(*ctx)) second = -second;
    CHECK(equals(lhs, multiply(adjoint_T(ctx, a, hx), hy) + second));

    GenId b = testutil::random_gen(rng, *ctx);
    EnvElement comp = adjoint_T(ctx, a, adjoint_T(ctx, b, x));
    EnvElement swapped = adjoint_T(ctx, b, adjoint_T(ctx, a, x));
    if (ctx->swap_sign(a, b) < 0) swapped = -swapped;
    comp -= swapped;
    EnvElement rhs(ctx);
    const BracketTerms& bt = ctx->bracket(a, b);
    for (int t = 0; t < bt.count; ++t)
      rhs += adjoint_T(ctx, bt.term[t].first, x).scaled(Rational(bt.term[t].second));
    CHECK(equals(comp, rhs));
  }
}

TEST_CASE("words over capacity are rejected") {
  Word w;
  for (std::size_t i = 0; i < Word::kMaxFactors; ++i) w.push_back(0);
  CHECK_THROWS_AS(w.push_back(0), std::length_error);
}

TEST_CASE("context mixing is an error") {
  ContextPtr a = Context::make(0, 2), b = Context::make(1, 2);
  EnvElement x = EnvElement::one(a), y = EnvElement::one(b);
  CHECK_THROWS_AS(multiply(x, y), std::invalid_argument);
}
