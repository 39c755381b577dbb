#include "piforge/factorials.hpp"

namespace piforge {

rational rising_factorial(const rational& x, std::uint64_t n) {
  mpq_class acc(1);
  mpq_class f(x.mpq());
  for (std::uint64_t i = 0; i < n; ++i, f += 1) acc *= f;
  return rational(acc);
}

rational falling_factorial(const rational& x, std::uint64_t n) {
  mpq_class acc(1);
  mpq_class f(x.mpq());
  for (std::uint64_t i = 0; i < n; ++i, f -= 1) acc *= f;
  return rational(acc);
}

mpz_class factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return rational(mpq_class(z));
}

rational gamma_quotient_exact(unsigned long m, unsigned long k) {
  rational num{mpq_class(factorial(m))};
  return num / rising_factorial(rational(1, 2), m + k);
}

}  // namespace piforge
