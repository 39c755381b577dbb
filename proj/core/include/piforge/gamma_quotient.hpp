#pragma once

#include <cstdint>
#include <vector>

#include "piforge/bessel_coeffs.hpp"
#include "piforge/real.hpp"

namespace piforge {

// Diagnostics for the formal expansion of Gamma(nu+1)/Gamma(nu+k+1/2) in
//   sqrt(pi)/2^(2nu) * sum_n (nu+1/2)_n <nu-1/2>_n (nu+1/2)_{k+n}
//                             (k+nu+2n+1/2) / (n! (k+n)! (2nu+1)_{k+n}).
// partial_sums[i] holds the prefactored sum through term i; min_term_index
// points at the smallest |term| seen in the scan (first occurrence), the
// optimal truncation point when magnitudes eventually diverge;
// best_relative_error = |partial_sums[min_term_index] - reference|/|reference|.
struct expansion_diagnostics {
  std::vector<big_real> partial_sums;
  std::uint64_t min_term_index;
  big_real best_relative_error;
  big_real reference_value;
};

// Scans terms n = 0..max_terms (stopping early once the stream terminates
// with an exactly zero term, as it does for nu = m+1/2 at n = m+1).
// Terms are generated exactly and rounded only at accumulation.
expansion_diagnostics gamma_quotient_expansion(const bessel_order& nu, unsigned long k,
                                               std::uint64_t max_terms,
                                               const precision_context& ctx);

}  // namespace piforge
