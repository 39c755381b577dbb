#pragma once

#include <cstdint>

#include "piforge/bessel_coeffs.hpp"
#include "piforge/real.hpp"

namespace piforge {

// Cross-check of the two expansions at one order: the exponentially scaled
// modified pair satisfies z * W{e^z K_nu, e^z I_nu} * e^{-2z} = 1 (from
// DLMF 10.28.2). Both factors and their derivatives are rebuilt termwise from
// the descending and ascending series, so |deviation| exposes the combined
// truncation and rounding error of the coefficient machinery.
struct wronskian_report {
  big_real deviation;            // z*(Kb*Ib' - Kb'*Ib)*e^{-2z} - 1
  big_real first_omitted_bound;  // error estimate from the first dropped terms
  std::uint64_t trunc_k;         // last index kept in the descending series
  std::uint64_t trunc_i;         // last index kept in the ascending series
};

// Truncations are chosen automatically: the descending (asymptotic) series is
// cut where its terms stop shrinking (it terminates for half-integer orders),
// the ascending one once terms sit below the working-precision floor.
// Requires z > 0 and a non-excluded order.
wronskian_report wronskian_check(const bessel_order& nu, const big_real& z,
                                 const precision_context& ctx);

}  // namespace piforge
