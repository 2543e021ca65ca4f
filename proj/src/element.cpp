#include "ugl/element.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ugl {

EnvElement EnvElement::one(ContextPtr ctx) {
  EnvElement e(std::move(ctx));
  e.terms_.emplace(Word(), Rational(1));
  return e;
}

EnvElement EnvElement::generator(ContextPtr ctx, GenId g) {
  EnvElement e(std::move(ctx));
  e.terms_.emplace(Word::single(g), Rational(1));
  return e;
}

EnvElement EnvElement::generator(ContextPtr ctx, Symbol row, Symbol col) {
  GenId g = ctx->gen(row, col);
  return generator(std::move(ctx), g);
}

EnvElement EnvElement::from_word(ContextPtr ctx, Word w, Rational c) {
  EnvElement e(std::move(ctx));
  e.add_term(w, c);
  return e;
}

void EnvElement::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvElement EnvElement::operator-() const {
  EnvElement r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

void require_same_context(const EnvElement& a, const EnvElement& b) {
  // a default-constructed zero has no context yet and may combine with anything
  if (a.context() && b.context() && a.context() != b.context())
    throw std::invalid_argument("EnvElement: mixed gl(m|n) contexts");
}

EnvElement operator+(const EnvElement& a, const EnvElement& b) {
  require_same_context(a, b);
  EnvElement r = a;
  r += b;
  return r;
}

EnvElement operator-(const EnvElement& a, const EnvElement& b) {
  require_same_context(a, b);
  EnvElement r = a;
  r -= b;
  return r;
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

EnvElement EnvElement::scaled(const Rational& c) const {
  EnvElement r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

std::vector<std::pair<Word, Rational>> EnvElement::sorted_terms() const {
  std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

EnvElement multiply(const EnvElement& x, const EnvElement& y, Exec ex) {
  require_same_context(x, y);
  EnvElement r(x.context() ? x.context() : y.context());
  const auto& yt = y.terms();
#ifdef _OPENMP
  if (ex == Exec::parallel && x.term_count() * y.term_count() > 4096) {
    auto xs = x.sorted_terms();
    EnvElement result(x.context());
#pragma omp parallel
    {
      EnvElement local(x.context());
#pragma omp for schedule(dynamic, 16) nowait
      for (long i = 0; i < static_cast<long>(xs.size()); ++i)
        for (const auto& [wy, cy] : yt) local.add_term(concat(xs[i].first, wy), xs[i].second * cy);
#pragma omp critical
      result += local;
    }
    return result;
  }
#else
  (void)ex;
#endif
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : yt) r.add_term(concat(wx, wy), cx * cy);
  return r;
}

EnvElement superbracket(const ContextPtr& ctx, GenId a, GenId b) {
  EnvElement r(ctx);
  const BracketTerms& bt = ctx->bracket(a, b);
  for (int i = 0; i < bt.count; ++i)
    r.add_term(Word::single(bt.term[i].first), Rational(bt.term[i].second));
  return r;
}

EnvElement superbracket(const EnvElement& x, const EnvElement& y) {
  require_same_context(x, y);
  const ContextPtr& ctx = x.context();
  EnvElement r(ctx);
  for (const auto& [wx, cx] : x.terms()) {
    if (wx.size() != 1) throw std::invalid_argument("superbracket: generators only");
    for (const auto& [wy, cy] : y.terms()) {
      if (wy.size() != 1) throw std::invalid_argument("superbracket: generators only");
      r += superbracket(ctx, wx[0], wy[0]).scaled(cx * cy);
    }
  }
  return r;
}

EnvElement adjoint_T(const ContextPtr& ctx, GenId a, const EnvElement& x) {
  if (x.context() && x.context() != ctx)
    throw std::invalid_argument("adjoint_T: mixed contexts");
  EnvElement r(ctx);
  Word wa = Word::single(a);
  int pa = ctx->gen_parity(a);
  for (const auto& [w, c] : x.terms()) {
    r.add_term(concat(wa, w), c);
    int s = (pa && w.parity(*ctx)) ? -1 : 1;
    r.add_term(concat(w, wa), c * Rational(-s));
  }
  return r;
}

std::vector<Split> signed_splits_positions(const std::vector<int>& parities, std::size_t k) {
  std::size_t mlen = parities.size();
  if (k > mlen) throw std::invalid_argument("signed_splits: k exceeds length");
  std::vector<Split> out;
  std::vector<std::size_t> idx(k);
  // iterate over k-subsets in lexicographic order
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Split s;
    s.left = idx;
    std::size_t p = 0;
    for (std::size_t i = 0; i < mlen; ++i) {
      if (p < k && idx[p] == i)
        ++p;
      else
        s.right.push_back(i);
    }
    // Koszul sign of moving the selected entries to the front: entry idx[j]
    // jumps over the unselected entries before it; only odd-odd hops count.
    int sign = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!parities[idx[j]]) continue;
      int odd_hops = 0;
      for (std::size_t t = 0; t < s.right.size() && s.right[t] < idx[j]; ++t)
        if (parities[s.right[t]]) ++odd_hops;
      if (odd_hops & 1) sign = -sign;
    }
    s.sign = sign;
    out.push_back(std::move(s));
    if (k == 0) break;
    // next subset
    std::size_t j = k;
    while (j-- > 0) {
      if (idx[j] != j + mlen - k) {
        ++idx[j];
        for (std::size_t t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        break;
      }
      if (j == 0) return out;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace ugl
