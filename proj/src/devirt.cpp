#include "ugl/devirt.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ugl {

bool is_irregular(const Context& ctx, const Word& w) {
  const int S = ctx.symbol_count();
  std::vector<int> balance(S, 0);  // created - annihilated, scanned from the right
  for (std::size_t pos = w.size(); pos-- > 0;) {
    GenId g = w[pos];
    int col = ctx.gen_col(g);
    if (ctx.sym_is_virtual(col)) {
      if (--balance[col] < 0) return true;
    }
    int row = ctx.gen_row(g);
    if (ctx.sym_is_virtual(row)) ++balance[row];
  }
  return false;
}

namespace {

// rightmost factor annihilating a virtual symbol, -1 if none
int rightmost_annihilator(const Context& ctx, const Word& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (ctx.gen_is_annihilator(w[i])) return static_cast<int>(i);
  return -1;
}

Word reencode_proper(const Context& src, const Context& dst, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int r = src.gen_row(w[i]), c = src.gen_col(w[i]);
    out.push_back(dst.gen_ids(r, c));  // proper ids agree between the contexts
  }
  return out;
}

constexpr long long kStepCap = 400000000LL;

void devirt_word_into(const Context& ctx, const Context& out_ctx, const Word& w0,
                      const Rational& c0, TermMap& done) {
  TermMap frontier;
  frontier.emplace(w0, c0);
  long long steps = 0;
  while (!frontier.empty()) {
    auto it = frontier.begin();
    Word w = it->first;
    Rational c = std::move(it->second);
    frontier.erase(it);
    int i = rightmost_annihilator(ctx, w);
    if (i < 0) {
      if (w.contains_virtual(ctx))
        throw std::domain_error("devirtualize: residual virtual creator; input not in Virt(m,n)");
      Word pw = reencode_proper(ctx, out_ctx, w);
      auto [dit, ins] = done.try_emplace(pw, c);
      if (!ins) {
        dit->second += c;
        if (dit->second.is_zero()) done.erase(dit);
      }
      continue;
    }
    if (i == static_cast<int>(w.size()) - 1) continue;  // irregular word, in Ker p
    GenId a = w[i], b = w[i + 1];
    int sgn = ctx.swap_sign(a, b);
    {
      Word sw = w.with_swapped(i);
      Rational add = sgn < 0 ? -c : c;
      auto [fit, ins] = frontier.try_emplace(sw, add);
      if (!ins) {
        fit->second += add;
        if (fit->second.is_zero()) frontier.erase(fit);
      }
    }
    const BracketTerms& bt = ctx.bracket(a, b);
    for (int t = 0; t < bt.count; ++t) {
      Word cw = w.with_pair_contracted(i, bt.term[t].first);
      Rational add = c * Rational(bt.term[t].second);
      auto [fit, ins] = frontier.try_emplace(cw, add);
      if (!ins) {
        fit->second += add;
        if (fit->second.is_zero()) frontier.erase(fit);
      }
    }
    if (++steps > kStepCap)
      throw std::runtime_error("devirtualize: step cap exceeded (engine bug)");
  }
}

}  // namespace

EnvElement devirtualize(const EnvElement& x, Exec ex) {
  const Context& ctx = *x.context();
  ContextPtr out_ctx = Context::make(0, ctx.n());
  EnvElement out(out_ctx);
  if (x.is_zero()) return out;

  std::vector<std::pair<Word, Rational>> pending(x.terms().begin(), x.terms().end());
#ifdef _OPENMP
  if (ex == Exec::parallel && pending.size() > 4) {
    std::atomic<bool> failed{false};
    std::string err;
#pragma omp parallel
    {
      TermMap local;
#pragma omp for schedule(dynamic, 4) nowait
      for (long i = 0; i < static_cast<long>(pending.size()); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
          devirt_word_into(ctx, *out_ctx, pending[i].first, pending[i].second, local);
        } catch (const std::exception& e) {
#pragma omp critical
          {
            failed.store(true, std::memory_order_relaxed);
            err = e.what();
          }
        }
      }
#pragma omp critical
      for (const auto& [w, c] : local) out.add_term(w, c);
    }
    if (failed) throw std::domain_error(err);
    return out;
  }
#else
  (void)ex;
#endif
  TermMap acc;
  for (const auto& [w, c] : pending) devirt_word_into(ctx, *out_ctx, w, c, acc);
  for (const auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

namespace ref {

namespace {

void devirt_rec(const Context& ctx, const Context& out_ctx, const Word& w, const Rational& c,
                TermMap& out) {
  int i = rightmost_annihilator(ctx, w);
  if (i < 0) {
    if (w.contains_virtual(ctx))
      throw std::domain_error("devirtualize: residual virtual creator; input not in Virt(m,n)");
    Word pw = reencode_proper(ctx, out_ctx, w);
    auto [it, ins] = out.try_emplace(pw, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  if (i == static_cast<int>(w.size()) - 1) return;
  GenId a = w[i], b = w[i + 1];
  int sgn = ctx.swap_sign(a, b);
  devirt_rec(ctx, out_ctx, w.with_swapped(i), sgn < 0 ? -c : c, out);
  const BracketTerms& bt = ctx.bracket(a, b);
  for (int t = 0; t < bt.count; ++t)
    devirt_rec(ctx, out_ctx, w.with_pair_contracted(i, bt.term[t].first),
               c * Rational(bt.term[t].second), out);
}

}  // namespace

EnvElement devirtualize(const EnvElement& x) {
  const Context& ctx = *x.context();
  ContextPtr out_ctx = Context::make(0, ctx.n());
  EnvElement out(out_ctx);
  for (const auto& [w, c] : x.terms()) {
    TermMap acc;
    devirt_rec(ctx, *out_ctx, w, c, acc);
    for (const auto& [nw, nc] : acc) out.add_term(nw, nc);
  }
  return out;
}

}  // namespace ref

EnvElement bitableau_monomial(const ContextPtr& ctx, const Tableau& S, const Tableau& T) {
  if (!(S.shape() == T.shape()))
    throw std::invalid_argument("bitableau_monomial: shape mismatch");
  Word w;
  for (std::size_t r = 0; r < S.rows.size(); ++r)
    for (std::size_t j = 0; j < S.rows[r].size(); ++j)
      w.push_back(ctx->gen(S.rows[r][j], T.rows[r][j]));
  return EnvElement::from_word(ctx, w);
}

EnvElement capelli_bitableau(const Tableau& S, const Tableau& T, const VirtualPool& pool,
                             Exec ex) {
  if (!(S.shape() == T.shape()))
    throw std::invalid_argument("capelli_bitableau: shape mismatch");
  const ContextPtr& ctx = pool.ctx;
  Tableau cod = coderuyts(S.shape(), pool);
  EnvElement word =
      multiply(bitableau_monomial(ctx, S, cod), bitableau_monomial(ctx, cod, T), ex);
  return devirtualize(word, ex);
}

}  // namespace ugl
