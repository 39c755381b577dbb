#include "piforge/bessel_coeffs.hpp"

#include "piforge/errors.hpp"
#include "piforge/factorials.hpp"

namespace piforge {

bool bessel_order::excluded() const {
  rational two_nu = nu_ * rational(2);
  return two_nu.is_integer() && nu_ <= rational(-1, 2);
}

bool bessel_order::half_integer() const {
  return (nu_ - rational(1, 2)).is_integer() && nu_ >= rational(1, 2);
}

unsigned long bessel_order::half_integer_m() const {
  if (!half_integer())
    throw invalid_order_error("bessel_order: " + nu_.str() + " is not m + 1/2");
  return mpz_class((nu_ - rational(1, 2)).num()).get_ui();
}

rational a_coeff(const bessel_order& nu, std::uint64_t n) {
  rational num = rising_factorial(nu.value() + rational(1, 2), n) *
                 falling_factorial(nu.value() - rational(1, 2), n);
  return num / (rational(mpq_class(factorial(n))) * rational(2).pow_int(long(n)));
}

rational_term_stream a_coeff_stream(const bessel_order& nu) {
  rational v = nu.value();
  return rational_term_stream(rational(1), [v](std::uint64_t n) {
    // a_{n+1}/a_n = (nu+1/2+n)(nu-1/2-n) / (2(n+1))
    rational nn{mpq_class(static_cast<unsigned long>(n))};
    return (v + rational(1, 2) + nn) * (v - rational(1, 2) - nn) /
           (rational(2) * (nn + rational(1)));
  });
}

rational b_coeff(const bessel_order& nu, std::uint64_t j) {
  rational den_poch = rising_factorial(nu.value() * rational(2) + rational(1), j);
  if (den_poch.is_zero())
    throw degenerate_order_error("b_coeff: (2nu+1)_" + std::to_string(j) +
                                 " vanishes for nu = " + nu.value().str());
  rational num = rational(2).pow_int(long(j)) *
                 rising_factorial(nu.value() + rational(1, 2), j);
  return num / (rational(mpq_class(factorial(j))) * den_poch);
}

rational_term_stream b_coeff_stream(const bessel_order& nu) {
  rational v = nu.value();
  return rational_term_stream(rational(1), [v](std::uint64_t j) {
    // b_{j+1}/b_j = 2(nu+1/2+j) / ((j+1)(2nu+1+j))
    rational jj{mpq_class(static_cast<unsigned long>(j))};
    rational den = (jj + rational(1)) * (v * rational(2) + rational(1) + jj);
    if (den.is_zero())
      throw degenerate_order_error("b_coeff_stream: degenerate order nu = " + v.str());
    return rational(2) * (v + rational(1, 2) + jj) / den;
  });
}

rational c_coeff_partial(const bessel_order& nu, long long k, std::uint64_t N) {
  if (nu.excluded())
    throw invalid_order_error("c_coeff_partial: order " + nu.value().str() +
                              " lies in the excluded set {-1/2, -1, -3/2, ...}");
  std::uint64_t n0 = k >= 0 ? 0 : static_cast<std::uint64_t>(-k);
  rational sum(0);
  if (n0 > N) return sum;
  rational_term_stream a = a_coeff_stream(nu);
  rational_term_stream b = b_coeff_stream(nu);
  rational knu = rational(static_cast<long>(k)) + nu.value() + rational(1, 2);
  for (std::uint64_t n = n0; n <= N; ++n) {
    const rational& an = a.advance_to(n);
    if (an.is_zero()) break;  // terminated: every later a_n is zero too
    const rational& bnk = b.advance_to(static_cast<std::uint64_t>(static_cast<long long>(n) + k));
    sum += an * bnk * (knu + rational(2) * rational(static_cast<long>(n)));
  }
  return sum;
}

std::vector<rational> recurrence_residuals(const bessel_order& nu, unsigned long k_max) {
  if (!nu.half_integer())
    throw invalid_order_error("recurrence_residuals: order must be m + 1/2, got " +
                              nu.value().str());
  unsigned long m = nu.half_integer_m();
  std::vector<rational> out;
  out.reserve(k_max);
  rational prev = c_coeff_partial(nu, 0, m);
  for (unsigned long k = 1; k <= k_max; ++k) {
    rational cur = c_coeff_partial(nu, static_cast<long long>(k), m);
    out.push_back((rational(k) + nu.value() - rational(1, 2)) * cur - rational(2) * prev);
    prev = cur;
  }
  return out;
}

}  // namespace piforge
