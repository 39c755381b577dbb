#include "piforge/gamma_quotient.hpp"

#include "piforge/errors.hpp"
#include "piforge/factorials.hpp"
#include "piforge/gamma.hpp"

namespace piforge {

namespace {

// Full expansion term (coefficient of the n-th summand), exact.
rational expansion_term(const rational& nu, unsigned long k, std::uint64_t n) {
  rational half(1, 2);
  rational num = rising_factorial(nu + half, n) * falling_factorial(nu - half, n) *
                 rising_factorial(nu + half, k + n) *
                 (rational(static_cast<long>(k)) + nu + rational(2) * rational(static_cast<long>(n)) + half);
  rational den = rational(mpq_class(factorial(static_cast<unsigned long>(n)))) *
                 rational(mpq_class(factorial(static_cast<unsigned long>(k + n)))) *
                 rising_factorial(rational(2) * nu + rational(1), k + n);
  return num / den;
}

}  // namespace

expansion_diagnostics gamma_quotient_expansion(const bessel_order& nu, unsigned long k,
                                               std::uint64_t max_terms,
                                               const precision_context& ctx) {
  if (nu.excluded())
    throw invalid_order_error("gamma_quotient_expansion: order " + nu.value().str() +
                              " lies in the excluded set {-1/2, -1, -3/2, ...}");
  const rational v = nu.value();

  // prefactor sqrt(pi) / 2^(2nu) = sqrt(pi) * exp(-2nu log 2)
  big_real pref = big_real::sqrt_pi(ctx);
  {
    big_real e = big_real(v * rational(-2), ctx) * log(big_real(2L, ctx));
    pref *= exp(e);
  }

  big_real reference = gamma(v + rational(1), ctx) /
                       gamma(v + rational(static_cast<long>(k)) + rational(1, 2), ctx);

  // Exact term recurrence; ratio of consecutive summands.
  rational term0 = expansion_term(v, k, 0);
  rational_term_stream stream(term0, [v, k](std::uint64_t n) {
    rational half(1, 2);
    rational nn(static_cast<long>(n));
    rational kk(static_cast<long>(k));
    rational num = (v + half + nn) * (v - half - nn) * (v + half + kk + nn) *
                   (kk + v + rational(2) * nn + rational(5, 2));
    rational den = (nn + 1) * (kk + nn + 1) * (rational(2) * v + rational(1) + kk + nn) *
                   (kk + v + rational(2) * nn + half);
    return num / den;
  });

  expansion_diagnostics d{{}, 0, big_real(ctx), std::move(reference)};
  big_real acc(0L, ctx);
  rational min_abs = abs(term0);
  for (std::uint64_t n = 0; n <= max_terms; ++n) {
    const rational& t = stream.term();
    acc += t;
    d.partial_sums.push_back(acc * pref);
    rational a = abs(t);
    if (a < min_abs) {
      min_abs = a;
      d.min_term_index = n;
    }
    if (t.is_zero()) break;  // terminating order: the sum is complete
    stream.advance();
  }

  const big_real& best = d.partial_sums[d.min_term_index];
  d.best_relative_error = abs(best - d.reference_value) / abs(d.reference_value);
  return d;
}

}  // namespace piforge
