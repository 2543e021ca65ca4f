#pragma once

#include "ugl/element.hpp"

namespace ugl {

// True iff the word is in normal form: factor ranks weakly increasing and no
// odd generator repeated in an adjacent pair (odd squares are zero).
bool is_normal_word(const Context& ctx, const Word& w);

// Super-PBW normal form. Rewrites adjacent out-of-order pairs ab into
// (-1)^{|a||b|} ba + [a,b] until every word is sorted; odd squares vanish.
// The result is the canonical representative; it does not depend on the
// rewriting strategy. Throws on pathological non-termination (engine bug).
EnvElement pbw_normal_form(const EnvElement& x, Exec ex = Exec::parallel);

// exact equality oracle: pbw(x - y) == 0
bool equals(const EnvElement& x, const EnvElement& y, Exec ex = Exec::parallel);

bool is_central(const EnvElement& x, Exec ex = Exec::parallel);

namespace ref {
// straightforward recursive rewriting, kept as the independent check of the
// batched kernel above
EnvElement pbw_normal_form(const EnvElement& x);
}  // namespace ref

}  // namespace ugl
