#include "piforge/heaviside.hpp"

#include "piforge/errors.hpp"
#include "piforge/gamma.hpp"

namespace piforge {

namespace {

// t^(k+delta) / Gamma(k+1+delta), or zero at the Gamma poles.
big_real side_term(const big_real& t, const rational& delta, long k,
                   const precision_context& ctx) {
  rational garg = rational(k) + rational(1) + delta;
  if (garg.is_nonpositive_integer()) return big_real(0L, ctx);
  big_real e(rational(k) + delta, ctx);
  return pow(t, e) / gamma(garg, ctx);
}

}  // namespace

big_real heaviside_exp(const big_real& t, const rational& delta, unsigned long k_pos,
                       unsigned long k_neg, const precision_context& ctx) {
  if (t.sign() <= 0 || t.is_nan())
    throw domain_error("heaviside_exp: t must be positive");
  big_real sum(0L, ctx);
  // Entire part first, ascending, then the tail; both at full working precision.
  for (unsigned long k = 0; k <= k_pos; ++k)
    sum += side_term(t, delta, static_cast<long>(k), ctx);
  for (unsigned long j = 1; j <= k_neg; ++j)
    sum += side_term(t, delta, -static_cast<long>(j), ctx);
  return sum;
}

unsigned long heaviside_optimal_tail(const big_real& t, const rational& delta,
                                     const precision_context& ctx) {
  if (t.sign() <= 0 || t.is_nan())
    throw domain_error("heaviside_optimal_tail: t must be positive");
  // Integer delta has an identically zero tail below some depth; report the
  // last nonzero entry.
  unsigned long best = 1;
  big_real best_mag(ctx);
  bool have = false;
  const unsigned long cap = 4096;
  for (unsigned long j = 1; j <= cap; ++j) {
    big_real m = abs(side_term(t, delta, -static_cast<long>(j), ctx));
    if (m.is_zero()) return have ? best : 0;
    if (!have || m <= best_mag) {
      best_mag = m;
      best = j;
      have = true;
    } else {
      return best;
    }
  }
  return best;
}

}  // namespace piforge
