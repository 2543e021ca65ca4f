#pragma once

#include "ugl/pbw.hpp"
#include "ugl/tableau.hpp"

namespace ugl {

// A word e_{a_m,b_m}...e_{a_1,b_1} (rightmost factor first) is irregular when
// some right subword annihilates a virtual symbol more often than it was
// created before: #{j <= i : b_j = g} > #{j < i : a_j = g}.
bool is_irregular(const Context& ctx, const Word& w);

// Devirtualization: push each rightmost virtual annihilator to the right
// (ab -> (-1)^{|a||b|} ba + [a,b]); a word ending in an annihilator is
// irregular and dropped. The image lives in the proper-only context gl(0|n).
// Throws if a residual virtual symbol cannot be eliminated (input outside the
// virtual subalgebra).
EnvElement devirtualize(const EnvElement& x, Exec ex = Exec::parallel);

namespace ref {
EnvElement devirtualize(const EnvElement& x);
}

// row-major product of e_{S(cell),T(cell)}
EnvElement bitableau_monomial(const ContextPtr& ctx, const Tableau& S, const Tableau& T);

// [S|T]: image of e_{S,C*} e_{C*,T} routed through a virtual Coderuyts
// tableau; independent of the pool used.
EnvElement capelli_bitableau(const Tableau& S, const Tableau& T, const VirtualPool& pool,
                             Exec ex = Exec::parallel);

}  // namespace ugl
