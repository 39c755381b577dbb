#pragma once

#include "piforge/rational.hpp"
#include "piforge/real.hpp"

namespace piforge {

// Gamma(x) for real x away from the poles at 0, -1, -2, ...
//
// Spouge's approximation with a = ceil(precision_bits * ln 2 / ln 2pi) + 2,
// evaluated with extra internal headroom; arguments below 1 (including
// negative non-integers) are lifted with Gamma(x) = Gamma(x+n) / prod(x+i).
// Relative error stays below 2^-(precision_bits+8); callers should budget
// the documented slack of 2^-(precision_bits-8) when combining values.
big_real gamma(const big_real& x, const precision_context& ctx);
big_real gamma(const rational& x, const precision_context& ctx);

// The a parameter the context selects; exposed for diagnostics.
unsigned spouge_parameter(const precision_context& ctx);

}  // namespace piforge
