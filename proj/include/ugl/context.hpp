#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ugl {

// Basis symbols of the Z2-graded space behind gl(m|n): n proper symbols
// 1..n (odd) and m virtual symbols a1..am (even).
enum class SymKind : std::uint8_t { proper = 0, virt = 1 };

struct Symbol {
  SymKind kind;
  int index;  // 1-based

  static Symbol proper(int i) { return {SymKind::proper, i}; }
  static Symbol virt(int s) { return {SymKind::virt, s}; }
  int parity() const { return kind == SymKind::proper ? 1 : 0; }
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  // proper symbols sort before virtual ones, then by index
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }
  std::string str() const;
};

using GenId = std::uint16_t;

// Result of a superbracket of two basis generators: at most two terms.
struct BracketTerms {
  std::uint8_t count = 0;
  std::array<std::pair<GenId, std::int8_t>, 2> term;
};

// One gl(m|n). Instances are interned by (m, n) so that pointer equality
// decides "same context"; all tables are computed once and read-only after
// construction, hence safe to share across threads.
class Context;
using ContextPtr = std::shared_ptr<const Context>;

class Context {
 public:
  static ContextPtr make(int virtual_count, int proper_count);

  int n() const { return n_; }
  int m() const { return m_; }
  int symbol_count() const { return m_ + n_; }
  int gen_count() const { return symbol_count() * symbol_count(); }

  // symbol ids: proper i -> i-1, virtual s -> n+s-1
  int sym_id(Symbol s) const;
  Symbol symbol(int id) const;
  bool sym_is_virtual(int id) const { return id >= n_; }
  int sym_parity(int id) const { return id < n_ ? 1 : 0; }

  GenId gen(Symbol row, Symbol col) const {
    return static_cast<GenId>(sym_id(row) * symbol_count() + sym_id(col));
  }
  GenId gen_ids(int row_id, int col_id) const {
    return static_cast<GenId>(row_id * symbol_count() + col_id);
  }
  int gen_row(GenId g) const { return g / symbol_count(); }
  int gen_col(GenId g) const { return g % symbol_count(); }
  int gen_parity(GenId g) const { return parity_[g]; }
  bool gen_has_virtual(GenId g) const {
    return sym_is_virtual(gen_row(g)) || sym_is_virtual(gen_col(g));
  }
  // col symbol virtual: the generator annihilates that virtual symbol
  bool gen_is_annihilator(GenId g) const { return sym_is_virtual(gen_col(g)); }

  // PBW order: proper-lowering < proper-Cartan < proper-raising < generators
  // touching a virtual symbol, ties broken by (row id, col id).
  std::uint16_t rank(GenId g) const { return rank_[g]; }

  //  [e_{a,b}, e_{c,d}] = delta_{bc} e_{a,d} - (-1)^{(|a|+|b|)(|c|+|d|)} delta_{ad} e_{c,b}
  const BracketTerms& bracket(GenId a, GenId b) const {
    return bracket_[static_cast<std::size_t>(a) * gen_count() + b];
  }
  // sign picked up when commuting two generators past each other
  int swap_sign(GenId a, GenId b) const {
    return (gen_parity(a) & gen_parity(b)) ? -1 : 1;
  }

  std::string gen_str(GenId g) const;

 private:
  Context(int m, int n);

  int m_, n_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint16_t> rank_;
  std::vector<BracketTerms> bracket_;
};

}  // namespace ugl
