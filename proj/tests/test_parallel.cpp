#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// The OpenMP kernels must agree exactly with the serial reference
// implementations on randomized workloads and on the production builders.

#include "helpers.hpp"
#include "ugl/capelli.hpp"
#include "ugl/superpoly.hpp"

using namespace ugl;
using testutil::Rng;

TEST_CASE("normal-form kernel matches the reference") {
  ContextPtr ctx = Context::make(2, 3);
  Rng rng(11111);
  for (int trial = 0; trial < 40; ++trial) {
    EnvElement x = testutil::random_element(rng, ctx, 12, 5);
    EnvElement a = pbw_normal_form(x, Exec::parallel);
    EnvElement b = pbw_normal_form(x, Exec::serial);
    EnvElement c = ref::pbw_normal_form(x);
    CHECK((a - b).is_zero());
    CHECK((a - c).is_zero());
  }
}

TEST_CASE("devirtualization kernel matches the reference") {
  ContextPtr ctx = Context::make(3, 3);
  Rng rng(22222);
  for (int trial = 0; trial < 40; ++trial) {
    EnvElement x(ctx);
    int terms = rng.uniform(1, 8);
    for (int t = 0; t < terms; ++t) {
      int k = rng.uniform(1, 3);
      Word w;
      std::vector<int> gs;
      for (int i = 0; i < k; ++i) gs.push_back(rng.uniform(1, 3));
      for (int i = 0; i < k; ++i)
        w.push_back(ctx->gen(Symbol::proper(rng.uniform(1, 3)), Symbol::virt(gs[i])));
      for (int i = 0; i < k; ++i)
        w.push_back(ctx->gen(Symbol::virt(gs[i]), Symbol::proper(rng.uniform(1, 3))));
      x.add_term(w, rng.coeff());
    }
    EnvElement a = devirtualize(x, Exec::parallel);
    EnvElement b = devirtualize(x, Exec::serial);
    EnvElement c = ref::devirtualize(x);
    CHECK((a - b).is_zero());
    CHECK((a - c).is_zero());
  }
}

TEST_CASE("action kernel matches the reference") {
  ContextPtr ctx = Context::make(0, 3);
  RepContextPtr rctx = RepContext::make(0, 3, 3);
  Rng rng(33333);
  for (int trial = 0; trial < 25; ++trial) {
    EnvElement x = testutil::random_element(rng, ctx, 12, 4, true);
    SuperPolynomial p(rctx);
    int terms = rng.uniform(1, 5);
    for (int t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> vars;
      int deg = rng.uniform(0, 4);
      for (int d = 0; d < deg; ++d)
        vars.push_back(rctx->var(rng.uniform(0, 2), rng.uniform(1, 3)));
      p.add_normalized(std::move(vars), rng.coeff());
    }
    SuperPolynomial a = act(x, p, Exec::parallel);
    SuperPolynomial b = act(x, p, Exec::serial);
    SuperPolynomial c = ref::act(x, p);
    CHECK((a - b).is_zero());
    CHECK((a - c).is_zero());
  }
}

TEST_CASE("production builders agree across kernels") {
  EnvElement k22p = rectangular_K(2, 2, Exec::parallel);
  EnvElement k22s = rectangular_K(2, 2, Exec::serial);
  CHECK((k22p - k22s).is_zero());

  EnvElement prod = multiply(capelli_C(3, 1), capelli_C(3, 0));
  CHECK((pbw_normal_form(prod, Exec::parallel) - ref::pbw_normal_form(prod)).is_zero());

  Shape lam({2, 2, 1});
  CHECK((capelli_deruyts(lam, 2, Exec::parallel) - capelli_deruyts(lam, 2, Exec::serial))
            .is_zero());
}
