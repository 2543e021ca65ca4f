// Acceptance suite: every headline identity of the engine checked end to end
// with exact arithmetic, one pass/fail line per criterion. Exit code 0 only
// when all criteria hold.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ugl/suites.hpp"

using namespace ugl;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %2d: %-58s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), secs, error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool suite_ok(const SuiteReport& rep) {
  for (const auto& id : rep.identities)
    if (!id.pass) std::printf("       failed identity: %s (%s)\n", id.name.c_str(),
                              id.note.c_str());
  return rep.all_pass();
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.seed = 20240901;
  opt.cases = 50;

  // 1. devirtualized one-row bitableau equals the shifted column determinant
  criterion(1, "one-row bitableau = Capelli column determinant, n=1..4", [&] {
    for (int n = 1; n <= 4; ++n)
      if (!equals(rectangular_K(n, 1, opt.exec), capelli_H(n, n), opt.exec)) return false;
    return true;
  });

  // 2. the classical Capelli identities on random polynomials
  criterion(2, "classical Capelli identities (vanishing + Omega-process)", [&] {
    return suite_ok(suite_capelli_identity(opt));
  });

  // 3. hook eigenvalues over the full desk grid
  criterion(3, "hook eigenvalues, |shape| <= 6, n <= 3, all mu <= 3", [&] {
    return suite_ok(suite_hook(opt));
  });

  // 4. row-insertion theorem
  criterion(4, "row insertion on (2,1),(2,2),(3,2),(3,2,2), all M", [&] {
    SuiteReport rep = suite_row_insertion(opt);
    bool weights_seen = false;
    for (const auto& id : rep.identities)
      if (id.name.find("(3,2)") != std::string::npos && id.name.find("{1,2}") != std::string::npos &&
          id.note.find("6,2,2,1") != std::string::npos)
        weights_seen = true;
    return suite_ok(rep) && weights_seen;
  });

  // 5. expansion theorem
  criterion(5, "expansion on the same grid, coefficients 2,-2,-2,1", [&] {
    SuiteReport rep = suite_expansion(opt);
    bool coeffs_seen = false;
    for (const auto& id : rep.identities)
      if (id.name.find("(3,2)") != std::string::npos && id.name.find("{1,2}") != std::string::npos &&
          id.note.find("2,-2,-2,1") != std::string::npos)
        coeffs_seen = true;
    return suite_ok(rep) && coeffs_seen;
  });

  // 6. factorization chains
  criterion(6, "factorization chains, rectangular and general shapes", [&] {
    return suite_ok(suite_factorization(opt));
  });

  // 7. centrality of the whole catalog
  criterion(7, "centrality of H, Hshift, C, Krect, Kshaped, n <= 3", [&] {
    return suite_ok(suite_centrality(opt));
  });

  // 8. Harish-Chandra suite
  criterion(8, "central characters: images, identities, eigen-consistency", [&] {
    return suite_ok(suite_hc(opt));
  });

  // 9. Koszul images and invariants
  criterion(9, "Koszul images = signed h-products; char-poly coefficients", [&] {
    return suite_ok(suite_koszul(opt));
  });

  // 10. proof machinery property suite
  criterion(10, "proof machinery: 16 randomized property families", [&] {
    return suite_ok(suite_proof_machinery(opt));
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
