#include "ugl/pbw.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ugl {

namespace {

constexpr long long kStepCap = 400000000LL;  // per-word rewrite guard

// first position i where (g_i, g_{i+1}) violates normal order, -1 if none
int first_defect(const Context& ctx, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    GenId a = w[i], b = w[i + 1];
    if (a == b && ctx.gen_parity(a)) return static_cast<int>(i);
    if (ctx.rank(a) > ctx.rank(b)) return static_cast<int>(i);
  }
  return -1;
}

// One rewrite of w at defect i, accumulated into `frontier`.
void rewrite_at(const Context& ctx, const Word& w, const Rational& c, int i, TermMap& frontier) {
  GenId a = w[i], b = w[i + 1];
  if (a == b && ctx.gen_parity(a)) return;  // odd square: term dies
  int sgn = ctx.swap_sign(a, b);
  {
    Word sw = w.with_swapped(i);
    auto [it, ins] = frontier.try_emplace(sw, sgn < 0 ? -c : c);
    if (!ins) {
      it->second += (sgn < 0 ? -c : c);
      if (it->second.is_zero()) frontier.erase(it);
    }
  }
  const BracketTerms& bt = ctx.bracket(a, b);
  for (int t = 0; t < bt.count; ++t) {
    Word cw = w.with_pair_contracted(i, bt.term[t].first);
    Rational add = c * Rational(bt.term[t].second);
    auto [it, ins] = frontier.try_emplace(cw, add);
    if (!ins) {
      it->second += add;
      if (it->second.is_zero()) frontier.erase(it);
    }
  }
}

void normalize_word_into(const Context& ctx, const Word& w0, const Rational& c0, TermMap& done) {
  TermMap frontier;
  frontier.emplace(w0, c0);
  long long steps = 0;
  while (!frontier.empty()) {
    auto it = frontier.begin();
    Word w = it->first;
    Rational c = std::move(it->second);
    frontier.erase(it);
    int i = first_defect(ctx, w);
    if (i < 0) {
      auto [dit, ins] = done.try_emplace(w, c);
      if (!ins) {
        dit->second += c;
        if (dit->second.is_zero()) done.erase(dit);
      }
      continue;
    }
    rewrite_at(ctx, w, c, i, frontier);
    if (++steps > kStepCap)
      throw std::runtime_error("pbw_normal_form: rewrite step cap exceeded (engine bug)");
  }
}

}  // namespace

bool is_normal_word(const Context& ctx, const Word& w) { return first_defect(ctx, w) < 0; }

EnvElement pbw_normal_form(const EnvElement& x, Exec ex) {
  EnvElement out(x.context());
  if (x.is_zero()) return out;
  const Context& ctx = *x.context();

  std::vector<std::pair<Word, Rational>> pending;
  pending.reserve(x.term_count());
  for (const auto& [w, c] : x.terms()) {
    if (is_normal_word(ctx, w))
      out.add_term(w, c);
    else
      pending.emplace_back(w, c);
  }
  if (pending.empty()) return out;

#ifdef _OPENMP
  if (ex == Exec::parallel && pending.size() > 8) {
#pragma omp parallel
    {
      TermMap local;
#pragma omp for schedule(dynamic, 8) nowait
      for (long i = 0; i < static_cast<long>(pending.size()); ++i)
        normalize_word_into(ctx, pending[i].first, pending[i].second, local);
#pragma omp critical
      for (const auto& [w, c] : local) out.add_term(w, c);
    }
    return out;
  }
#else
  (void)ex;
#endif
  TermMap acc;
  for (const auto& [w, c] : pending) normalize_word_into(ctx, w, c, acc);
  for (const auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

bool equals(const EnvElement& x, const EnvElement& y, Exec ex) {
  require_same_context(x, y);
  return pbw_normal_form(x - y, ex).is_zero();
}

bool is_central(const EnvElement& x, Exec ex) {
  const ContextPtr& ctx = x.context();
  for (int g = 0; g < ctx->gen_count(); ++g) {
    EnvElement gen = EnvElement::generator(ctx, static_cast<GenId>(g));
    if (!equals(multiply(x, gen, ex), multiply(gen, x, ex), ex)) return false;
  }
  return true;
}

namespace ref {

namespace {

void normalize_rec(const Context& ctx, const Word& w, const Rational& c, TermMap& out) {
  int i = first_defect(ctx, w);
  if (i < 0) {
    auto [it, ins] = out.try_emplace(w, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  GenId a = w[i], b = w[i + 1];
  if (a == b && ctx.gen_parity(a)) return;
  int sgn = ctx.swap_sign(a, b);
  normalize_rec(ctx, w.with_swapped(i), sgn < 0 ? -c : c, out);
  const BracketTerms& bt = ctx.bracket(a, b);
  for (int t = 0; t < bt.count; ++t)
    normalize_rec(ctx, w.with_pair_contracted(i, bt.term[t].first),
                  c * Rational(bt.term[t].second), out);
}

}  // namespace

EnvElement pbw_normal_form(const EnvElement& x) {
  EnvElement out(x.context());
  if (x.is_zero()) return out;
  for (const auto& [w, c] : x.terms()) {
    TermMap acc;
    normalize_rec(*x.context(), w, c, acc);
    for (const auto& [nw, nc] : acc) out.add_term(nw, nc);
  }
  return out;
}

}  // namespace ref

}  // namespace ugl
