#pragma once

#include <cstdint>
#include <optional>

#include "ugl/render.hpp"

namespace ugl {

struct SuiteOptions {
  std::uint64_t seed = 20240901;
  int jobs = 0;      // >1: run suite identities concurrently with that many threads
  int max_n = 5;     // guard for full column-determinant expansion
  int cases = 50;    // randomized cases per property
  Exec exec = Exec::parallel;
};

// criterion-sized suites; parameters narrow the default grid when given
SuiteReport suite_capelli_identity(const SuiteOptions& opt);
SuiteReport suite_hook(const SuiteOptions& opt, int only_n = 0, int only_p = 0);
SuiteReport suite_row_insertion(const SuiteOptions& opt,
                                const std::optional<Shape>& shape = std::nullopt,
                                const std::optional<std::vector<int>>& M = std::nullopt);
SuiteReport suite_expansion(const SuiteOptions& opt,
                            const std::optional<Shape>& shape = std::nullopt,
                            const std::optional<std::vector<int>>& M = std::nullopt);
SuiteReport suite_factorization(const SuiteOptions& opt, int only_n = 0, int only_p = 0);
SuiteReport suite_centrality(const SuiteOptions& opt, const std::string& element_desc = "",
                             int n = 0);
SuiteReport suite_hc(const SuiteOptions& opt, int only_n = 0);
SuiteReport suite_koszul(const SuiteOptions& opt, int only_n = 0);
SuiteReport suite_proof_machinery(const SuiteOptions& opt);

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// all partitions with 1 <= |lambda| <= max_weight and lambda_1 <= max_part
std::vector<Shape> partitions_up_to(int max_part, int max_weight);
// all weakly decreasing n-tuples with entries in 0..max_entry
std::vector<Weight> dominant_weights(int n, int max_entry);

// scalar of the action of K^lambda on v_mu, computed through the virtual
// presentation (one balanced word); nullopt when the result is not an exact
// multiple of v_mu
std::optional<Rational> hook_action_scalar(const Shape& lambda, const Weight& mu, int n,
                                           Exec ex = Exec::parallel);

}  // namespace ugl
