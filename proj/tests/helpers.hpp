#pragma once

// Test-only utilities: seeded randomizers and brute-force oracles kept
// independent of the library kernels they check.

#include <random>
#include <vector>

#include "ugl/pbw.hpp"

namespace testutil {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
  ugl::Rational coeff() {
    int c = uniform(-4, 4);
    return ugl::Rational(c == 0 ? 1 : c);
  }
};

inline ugl::GenId random_gen(Rng& rng, const ugl::Context& ctx) {
  return static_cast<ugl::GenId>(rng.uniform(0, ctx.gen_count() - 1));
}

inline ugl::GenId random_proper_gen(Rng& rng, const ugl::Context& ctx) {
  return ctx.gen_ids(rng.uniform(0, ctx.n() - 1), rng.uniform(0, ctx.n() - 1));
}

inline ugl::Word random_word(Rng& rng, const ugl::Context& ctx, int max_len,
                             bool proper_only = false) {
  ugl::Word w;
  int len = rng.uniform(0, max_len);
  for (int i = 0; i < len; ++i)
    w.push_back(proper_only ? random_proper_gen(rng, ctx) : random_gen(rng, ctx));
  return w;
}

inline ugl::EnvElement random_element(Rng& rng, const ugl::ContextPtr& ctx, int max_terms,
                                      int max_len, bool proper_only = false) {
  ugl::EnvElement x(ctx);
  int t = rng.uniform(1, max_terms);
  for (int i = 0; i < t; ++i)
    x.add_term(random_word(rng, *ctx, max_len, proper_only), rng.coeff());
  return x;
}

// sign of the permutation sending `from` to `to` (both orderings of the same
// distinct values), by explicit inversion count
inline int permutation_sign_oracle(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> pos;
  for (int v : to) {
    for (std::size_t i = 0; i < from.size(); ++i)
      if (from[i] == v) pos.push_back(static_cast<int>(i));
  }
  int s = 1;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) s = -s;
  return s;
}

}  // namespace testutil
