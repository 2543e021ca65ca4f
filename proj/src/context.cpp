#include "ugl/context.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ugl {

std::string Symbol::str() const {
  return kind == SymKind::proper ? std::to_string(index) : "a" + std::to_string(index);
}

namespace {
std::mutex g_registry_mutex;
std::map<std::pair<int, int>, std::weak_ptr<const Context>> g_registry;
}  // namespace

ContextPtr Context::make(int virtual_count, int proper_count) {
  if (proper_count < 0 || virtual_count < 0 || proper_count + virtual_count == 0)
    throw std::invalid_argument("Context: need nonnegative dimensions, not both zero");
  if (proper_count + virtual_count > 250)
    throw std::invalid_argument("Context: dimension too large for generator encoding");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(virtual_count, proper_count);
  if (auto it = g_registry.find(key); it != g_registry.end())
    if (auto sp = it->second.lock()) return sp;
  ContextPtr ctx(new Context(virtual_count, proper_count));
  g_registry[key] = ctx;
  return ctx;
}

int Context::sym_id(Symbol s) const {
  if (s.index < 1) throw std::invalid_argument("Symbol: index must be positive");
  if (s.kind == SymKind::proper) {
    if (s.index > n_) throw std::invalid_argument("Symbol: proper index exceeds n");
    return s.index - 1;
  }
  if (s.index > m_) throw std::invalid_argument("Symbol: virtual index exceeds m");
  return n_ + s.index - 1;
}

Symbol Context::symbol(int id) const {
  return id < n_ ? Symbol::proper(id + 1) : Symbol::virt(id - n_ + 1);
}

Context::Context(int m, int n) : m_(m), n_(n) {
  const int S = m + n;
  const int G = S * S;
  parity_.resize(G);
  for (int r = 0; r < S; ++r)
    for (int c = 0; c < S; ++c)
      parity_[r * S + c] = static_cast<std::uint8_t>((sym_parity(r) + sym_parity(c)) & 1);

  // order classes, then (row, col)
  auto cls = [&](GenId g) {
    int r = g / S, c = g % S;
    if (r < n_ && c < n_) {
      if (r > c) return 0;  // lowering
      if (r == c) return 1; // Cartan
      return 2;             // raising
    }
    return 3;               // touches a virtual symbol
  };
  std::vector<GenId> order(G);
  std::iota(order.begin(), order.end(), GenId{0});
  std::stable_sort(order.begin(), order.end(), [&](GenId a, GenId b) {
    int ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb;
    if (a / S != b / S) return a / S < b / S;
    return a % S < b % S;
  });
  rank_.resize(G);
  for (int i = 0; i < G; ++i) rank_[order[i]] = static_cast<std::uint16_t>(i);

  bracket_.resize(static_cast<std::size_t>(G) * G);
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c)
        for (int d = 0; d < S; ++d) {
          GenId x = static_cast<GenId>(a * S + b), y = static_cast<GenId>(c * S + d);
          BracketTerms& out = bracket_[static_cast<std::size_t>(x) * G + y];
          int sgn = ((sym_parity(a) + sym_parity(b)) & 1) && ((sym_parity(c) + sym_parity(d)) & 1)
                        ? -1
                        : 1;
          if (b == c) {
            GenId t = static_cast<GenId>(a * S + d);
            out.term[out.count++] = {t, 1};
          }
          if (a == d) {
            GenId t = static_cast<GenId>(c * S + b);
            if (out.count == 1 && out.term[0].first == t) {
              // both delta terms hit the same generator; happens only for a==b==c==d
              int coeff = 1 - sgn;
              out.count = 0;
              if (coeff != 0) out.term[out.count++] = {t, static_cast<std::int8_t>(coeff)};
            } else {
              out.term[out.count++] = {t, static_cast<std::int8_t>(-sgn)};
            }
          }
        }
}

std::string Context::gen_str(GenId g) const {
  return "e(" + symbol(gen_row(g)).str() + "," + symbol(gen_col(g)).str() + ")";
}

}  // namespace ugl
