#pragma once

#include <cstdint>

#include "piforge/rational.hpp"

namespace piforge {

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
rational rising_factorial(const rational& x, std::uint64_t n);

// Falling factorial <x>_n = x (x-1) ... (x-n+1); <x>_0 = 1.
rational falling_factorial(const rational& x, std::uint64_t n);

mpz_class factorial(unsigned long n);

// Convention: 0 when k > n, so sums may run past the natural support.
rational binomial(unsigned long n, unsigned long k);

// Exact value of m! / (1/2)_{m+k}, i.e. Gamma(m+1)/Gamma(m+k+1/2) with the
// sqrt(pi) factor divided out.
rational gamma_quotient_exact(unsigned long m, unsigned long k);

}  // namespace piforge
