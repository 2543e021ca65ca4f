#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "ugl/rational.hpp"
#include "ugl/word.hpp"

namespace ugl {

// Which kernel drives the data-parallel loops. `parallel` uses OpenMP when
// compiled in; the serial reference implementations in ugl::ref stay
// independent of either path.
enum class Exec { serial, parallel };

using TermMap = std::unordered_map<Word, Rational, WordHash>;

// Element of U(gl(m|n)): exact-rational combination of generator words.
// Zero coefficients are never stored. Values are immutable in spirit: every
// operation returns a fresh element.
class EnvElement {
 public:
  EnvElement() = default;
  explicit EnvElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static EnvElement zero(ContextPtr ctx) { return EnvElement(std::move(ctx)); }
  static EnvElement one(ContextPtr ctx);
  static EnvElement generator(ContextPtr ctx, GenId g);
  static EnvElement generator(ContextPtr ctx, Symbol row, Symbol col);
  static EnvElement from_word(ContextPtr ctx, Word w, Rational c = Rational(1));

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);

  EnvElement operator-() const;
  friend EnvElement operator+(const EnvElement& a, const EnvElement& b);
  friend EnvElement operator-(const EnvElement& a, const EnvElement& b);
  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement scaled(const Rational& c) const;

  // deterministic view: terms sorted by word
  std::vector<std::pair<Word, Rational>> sorted_terms() const;

 private:
  ContextPtr ctx_;
  TermMap terms_;
};

void require_same_context(const EnvElement& a, const EnvElement& b);

// free bilinear concatenation of words
EnvElement multiply(const EnvElement& x, const EnvElement& y, Exec ex = Exec::parallel);

// [e_a, e_b] as an element (at most two terms)
EnvElement superbracket(const ContextPtr& ctx, GenId a, GenId b);
EnvElement superbracket(const EnvElement& x, const EnvElement& y);

// adjoint superderivation T_a(N) = aN - (-1)^{|a||N|} N a, word by word
EnvElement adjoint_T(const ContextPtr& ctx, GenId a, const EnvElement& x);

// all signed splits of a sequence with the given entry parities into a left
// part of size k and its complement; sign is the Koszul sign of the unshuffle
// (for all-odd entries this is the ordinary permutation sign)
struct Split {
  std::vector<std::size_t> left;   // positions, increasing
  std::vector<std::size_t> right;  // complement, increasing
  int sign;
};
std::vector<Split> signed_splits_positions(const std::vector<int>& parities, std::size_t k);

// convenience variant on sequences of distinct symbols (all odd)
template <typename T>
struct SymbolSplit {
  std::vector<T> left, right;
  int sign;
};
template <typename T>
std::vector<SymbolSplit<T>> signed_splits(const std::vector<T>& w, std::size_t k) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j]) throw std::invalid_argument("signed_splits: duplicate entries");
  std::vector<int> par(w.size(), 1);
  std::vector<SymbolSplit<T>> out;
  for (const Split& s : signed_splits_positions(par, k)) {
    SymbolSplit<T> r;
    r.sign = s.sign;
    for (auto p : s.left) r.left.push_back(w[p]);
    for (auto p : s.right) r.right.push_back(w[p]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ugl
