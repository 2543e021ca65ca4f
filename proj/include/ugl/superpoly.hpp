#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ugl/capelli.hpp"

namespace ugl {

// The supersymmetric algebra C[M_{m|n,d}] extended by the auxiliary gamma
// row. Variables (a|j): proper rows give commuting variables, virtual rows
// and gamma give anticommuting ones.
class RepContext;
using RepContextPtr = std::shared_ptr<const RepContext>;

class RepContext {
 public:
  static RepContextPtr make(int virtual_count, int proper_count, int cols);

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }

  // row ids: proper 0..n-1, virtual n..n+m-1, gamma = n+m
  int gamma_row() const { return n_ + m_; }
  int row_id(Symbol s) const;
  bool row_is_proper(int row) const { return row < n_; }
  int var_parity(int var) const { return row_is_proper(var / d_) ? 0 : 1; }

  std::uint32_t var(int row_id, int col) const {  // col is 1-based
    return static_cast<std::uint32_t>(row_id * d_ + (col - 1));
  }
  int var_row(std::uint32_t v) const { return static_cast<int>(v) / d_; }
  int var_col(std::uint32_t v) const { return static_cast<int>(v) % d_ + 1; }
  std::string var_str(std::uint32_t v) const;

 private:
  RepContext(int m, int n, int d) : m_(m), n_(n), d_(d) {}
  int m_, n_, d_;
};

// canonically sorted variable list; odd variables appear at most once
using Monomial = std::vector<std::uint32_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : m) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

class SuperPolynomial {
 public:
  SuperPolynomial() = default;
  explicit SuperPolynomial(RepContextPtr ctx) : ctx_(std::move(ctx)) {}

  static SuperPolynomial zero(RepContextPtr ctx) { return SuperPolynomial(std::move(ctx)); }
  static SuperPolynomial one(RepContextPtr ctx);
  static SuperPolynomial variable(const RepContextPtr& ctx, Symbol row, int col);

  const RepContextPtr& context() const { return ctx_; }
  const std::unordered_map<Monomial, Rational, MonomialHash>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // sorts `vars`, folds the odd-odd inversion sign into the coefficient,
  // drops the term when an odd variable repeats
  void add_normalized(std::vector<std::uint32_t> vars, Rational coeff);
  void add_term(const Monomial& mono, const Rational& coeff);  // mono already canonical

  int monomial_parity(const Monomial& mono) const;

  SuperPolynomial operator-() const;
  friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial scaled(const Rational& k) const;

  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

 private:
  RepContextPtr ctx_;
  std::unordered_map<Monomial, Rational, MonomialHash> terms_;
};

inline SuperPolynomial scale(const SuperPolynomial& p, const Rational& k) { return p.scaled(k); }

void require_same_context(const SuperPolynomial& a, const SuperPolynomial& b);

// left superpolarization D_{a,b}: (c|j) -> delta_{bc} (a|j), super-Leibniz
SuperPolynomial superpolarize(Symbol a, Symbol b, const SuperPolynomial& p);
SuperPolynomial superpolarize_rows(int row_a, int row_b, const SuperPolynomial& p);

// U(gl(m|n))-action: words act as composites of polarizations, rightmost
// factor first; the element's context must embed in the polynomial's.
SuperPolynomial act(const EnvElement& x, const SuperPolynomial& p, Exec ex = Exec::parallel);

namespace ref {
SuperPolynomial act(const EnvElement& x, const SuperPolynomial& p);
}

// biproduct (omega|varpi) through the gamma device; zero on length mismatch
SuperPolynomial biproduct(const RepContextPtr& ctx, const std::vector<Symbol>& omega,
                          const std::vector<int>& cols);

// signed product of row biproducts; zero on shape mismatch
SuperPolynomial young_bitableau(const RepContextPtr& ctx, const Tableau& S,
                                const std::vector<std::vector<int>>& T);

// weakly decreasing nonnegative weight with n parts
using Weight = std::vector<int>;
void validate_weight(const Weight& mu, int n);
Shape weight_conjugate(const Weight& mu);

// v_mu: Young bitableau of the conjugate shape with Deruyts rows on both sides
SuperPolynomial highest_weight_vector(const RepContextPtr& ctx, const Weight& mu);

// closed-form eigenvalue of K^lambda on v_mu
Rational hook_eigenvalue(const Shape& lambda, const Weight& mu, int n);

// p == c * v? returns c; nullopt when p is not an exact multiple
std::optional<Rational> extract_scalar(const SuperPolynomial& p, const SuperPolynomial& v);

// derivative with respect to one commuting variable
SuperPolynomial partial_derivative(const SuperPolynomial& p, std::uint32_t var);

// Cayley process: det of the matrix of partials, n!-term signed sum
SuperPolynomial cayley_omega(const SuperPolynomial& f);

// det[(i|j)] over the square proper matrix
SuperPolynomial bracket_poly(const RepContextPtr& ctx);

// H_n^{(n)}(f) = 0 when n > d, = bracket * Omega(f) when n == d
bool verify_capelli_identity_case(int n, int d, const SuperPolynomial& f, Exec ex = Exec::parallel);

}  // namespace ugl
