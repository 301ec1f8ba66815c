#pragma once

#include <string>

#include "grass/schur.hpp"

namespace grass {

/// Evaluates a class expression in A: sums, differences and products of
/// Schubert classes "s[2,1]", Chern variables "p1^2", "q2", rationals "3/2"
/// and parenthesized subexpressions. Throws std::invalid_argument on bad input.
SchubertVector parse_class(const RingContext& ctx, const std::string& text);

}  // namespace grass
