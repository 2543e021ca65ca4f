// Benchmark comparing the OpenMP kernels against the serial reference
// implementations on representative workloads: normal-form reduction of a
// product of column determinants, devirtualization of a multirow bitableau,
// and a module action.

#include <chrono>
#include <cstdio>
#include <functional>

#include "ugl/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ugl;

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial, double parallel, std::size_t terms) {
  std::printf("%-44s %10.1f ms %10.1f ms %7.2fx  (%zu terms)\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, terms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the batched kernel serially\n\n");
#endif
  std::printf("%-44s %13s %13s %9s\n", "workload", "reference", "parallel", "speedup");

  {
    EnvElement prod = multiply(multiply(capelli_C(3, 2), capelli_C(3, 1)), capelli_C(3, 0));
    EnvElement a, b;
    double ts = time_ms([&] { a = ref::pbw_normal_form(prod); });
    double tp = time_ms([&] { b = pbw_normal_form(prod, Exec::parallel); });
    row("normal form of C_3(2) C_3(1) C_3(0)", ts, tp, b.term_count());
    if (!(a - b).is_zero()) std::printf("  MISMATCH between kernels!\n");
  }
  {
    Shape lam({3, 2, 2});
    ContextPtr ctx = Context::make(3, 3);
    VirtualPool pool = VirtualPool::make(ctx, 3);
    Tableau cod = coderuyts(lam, pool);
    EnvElement word = multiply(bitableau_monomial(ctx, reverse_deruyts(lam, 3), cod),
                               bitableau_monomial(ctx, cod, deruyts(lam, 3)));
    EnvElement a, b;
    double ts = time_ms([&] { a = ref::devirtualize(word); });
    double tp = time_ms([&] { b = devirtualize(word, Exec::parallel); });
    row("devirtualization of the (3,2,2) bitableau", ts, tp, b.term_count());
    if (!(a - b).is_zero()) std::printf("  MISMATCH between kernels!\n");
  }
  {
    EnvElement K = rectangular_K(3, 2);
    RepContextPtr rctx = RepContext::make(0, 3, 3);
    SuperPolynomial v = highest_weight_vector(rctx, Weight{3, 3, 3});
    SuperPolynomial a, b;
    double ts = time_ms([&] { a = ref::act(K, v); });
    double tp = time_ms([&] { b = act(K, v, Exec::parallel); });
    row("action of K_3^2 on v_(3,3,3)", ts, tp, b.term_count());
    if (!(a - b).is_zero()) std::printf("  MISMATCH between kernels!\n");
  }
  {
    EnvElement lhs = multiply(subset_bitableau({1, 2}, 3), capelli_deruyts(Shape({3, 2}), 3));
    EnvElement a, b;
    double ts = time_ms([&] { a = ref::pbw_normal_form(lhs); });
    double tp = time_ms([&] { b = pbw_normal_form(lhs, Exec::parallel); });
    row("normal form of [21|12] K^(3,2)", ts, tp, b.term_count());
    if (!(a - b).is_zero()) std::printf("  MISMATCH between kernels!\n");
  }
  return 0;
}
