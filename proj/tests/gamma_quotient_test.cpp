#include "doctest.h"

#include "piforge/errors.hpp"
#include "piforge/gamma_quotient.hpp"

using namespace piforge;

TEST_CASE("terminating orders reproduce the quotient to rounding level") {
  const precision_context ctx(128);
  for (long mm = 0; mm <= 3; ++mm) {
    for (unsigned long k : {0ul, 1ul, 5ul}) {
      const auto d =
          gamma_quotient_expansion(bessel_order(rational(2 * mm + 1, 2)), k, 40, ctx);
      CHECK_MESSAGE(d.best_relative_error < big_real::pow2(-116, ctx),
                    "m = " << mm << ", k = " << k);
      // the scan stops at the first exactly-zero term, n = m+1
      CHECK(d.min_term_index == static_cast<std::uint64_t>(mm) + 1);
      CHECK(d.partial_sums.size() == static_cast<std::size_t>(mm) + 2);
    }
  }
}

TEST_CASE("frozen diagnostic for a generic order") {
  const precision_context ctx(256);
  const auto d = gamma_quotient_expansion(bessel_order::parse("1/4"), 5, 120, ctx);
  // magnitudes still shrink through the whole window at this k
  CHECK(d.min_term_index == 120);
  // bracket computed with an independent bignum script
  CHECK(d.best_relative_error > big_real::from_decimal("1.6e-11", ctx));
  CHECK(d.best_relative_error < big_real::from_decimal("1.7e-11", ctx));
}

TEST_CASE("optimal-cut error improves with k") {
  const precision_context ctx(256);
  const bessel_order nu = bessel_order::parse("1/4");
  const auto e5 = gamma_quotient_expansion(nu, 5, 120, ctx).best_relative_error;
  const auto e20 = gamma_quotient_expansion(nu, 20, 120, ctx).best_relative_error;
  CHECK(e20 < e5);
}

TEST_CASE("reference value is the plain quotient") {
  const precision_context ctx(128);
  const auto d = gamma_quotient_expansion(bessel_order::parse("3/2"), 0, 10, ctx);
  // Gamma(5/2)/Gamma(2) = (3/4) sqrt(pi)
  const big_real want = big_real(rational(3, 4), ctx) * big_real::sqrt_pi(ctx);
  CHECK(within_relative(d.reference_value, want, big_real::pow2(-116, ctx)));
}

TEST_CASE("excluded orders are rejected") {
  const precision_context ctx(64);
  CHECK_THROWS_AS(gamma_quotient_expansion(bessel_order::parse("-3/2"), 0, 10, ctx),
                  invalid_order_error);
  CHECK_THROWS_AS(gamma_quotient_expansion(bessel_order::parse("-1"), 0, 10, ctx),
                  invalid_order_error);
}
