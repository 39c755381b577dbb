#pragma once

#include "piforge/rational.hpp"
#include "piforge/real.hpp"

namespace piforge {

// Truncation of the two-sided exponential series
//   exp(t) = sum_{k=-inf}^{inf} t^(k+delta) / Gamma(k+1+delta),
// summed over k in [-k_neg, k_pos] for t > 0. Terms whose Gamma argument is
// a non-positive integer are exactly zero (1/Gamma pole) and are skipped,
// which reduces integer delta to the plain Taylor series, index-shifted.
big_real heaviside_exp(const big_real& t, const rational& delta, unsigned long k_pos,
                       unsigned long k_neg, const precision_context& ctx);

// Smallest-|term| truncation depth for the k < 0 tail: the largest k_neg
// such that tail magnitudes are still non-increasing at -k_neg.
unsigned long heaviside_optimal_tail(const big_real& t, const rational& delta,
                                     const precision_context& ctx);

}  // namespace piforge
