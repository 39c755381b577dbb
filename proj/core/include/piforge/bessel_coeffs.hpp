#pragma once

#include <cstdint>
#include <vector>

#include "piforge/rational.hpp"
#include "piforge/term_stream.hpp"

namespace piforge {

// Exact Bessel order nu. Orders in {-1/2, -1, -3/2, -2, ...} break the
// ascending series' Pochhammer denominators and are rejected by the
// operations that need them, not at construction.
class bessel_order {
 public:
  explicit bessel_order(rational nu) : nu_(std::move(nu)) {}
  static bessel_order parse(std::string_view text) { return bessel_order(rational::parse(text)); }

  const rational& value() const { return nu_; }

  // nu in {-1/2, -1, -3/2, ...}: 2*nu an integer and nu <= -1/2.
  bool excluded() const;
  // nu = m + 1/2 for integer m >= 0 (the terminating orders).
  bool half_integer() const;
  // The m with nu = m + 1/2; requires half_integer().
  unsigned long half_integer_m() const;

 private:
  rational nu_;
};

// Coefficient a_n(nu) of the large-argument expansion of the modified
// Bessel function K_nu (DLMF 10.40.2, with the standard 8z -> our 2z
// normalization folded in):
//   a_n(nu) = (nu+1/2)_n <nu-1/2>_n / (n! 2^n).
// Vanishes for n > m when nu = m+1/2.
rational a_coeff(const bessel_order& nu, std::uint64_t n);
rational_term_stream a_coeff_stream(const bessel_order& nu);

// Coefficient b_j(nu) of the exponentially scaled ascending series
// e^z I_nu(z) = z^nu/(2^nu Gamma(nu+1)) sum b_j z^j (DLMF 10.39.5 via the
// confluent form):
//   b_j(nu) = 2^j (nu+1/2)_j / (j! (2nu+1)_j).
// Throws degenerate_order_error when (2nu+1)_j vanishes.
rational b_coeff(const bessel_order& nu, std::uint64_t j);
rational_term_stream b_coeff_stream(const bessel_order& nu);

// Partial cross-series coefficient
//   sum_{n=max(0,-k)}^{N} a_n(nu) b_{n+k}(nu) (k + 2n + nu + 1/2),
// the coefficient of z^-k in the product of the two scaled Bessel series.
// Complete (equal for every larger N) once nu = m+1/2 and N >= m.
rational c_coeff_partial(const bessel_order& nu, long long k, std::uint64_t N);

// Residuals (k+nu-1/2) c_k - 2 c_{k-1} for k = 1..k_max with the complete
// half-integer sums; identically zero is the expected outcome.
// Requires a half-integer order.
std::vector<rational> recurrence_residuals(const bessel_order& nu, unsigned long k_max);

}  // namespace piforge
