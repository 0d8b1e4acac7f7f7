// Text expressions over the positive part, e.g. "[E{12},E{233}] - r(r-s)E{23}^2".
#pragma once

#include "uqf4/pbw.hpp"

#include <string_view>

namespace uqf4 {

// Grammar: sums and differences of products; factors are integers, r, s, E{word} (the Lyndon
// root word), [x, y] (the bracket xy - <omega'_{deg y}, omega_{deg x}> yx), parenthesized
// expressions and powers "^n".  Juxtaposition multiplies.  Negative powers apply to scalars only.
// Throws CoeffError on malformed input.
PbwElem<RatFunc2> evaluate_expression(std::string_view text, PbwEngine<RatFunc2>& eng);

// Convex index of the root whose Lyndon word is w, or 0.
int root_by_word(std::string_view w);

}  // namespace uqf4
