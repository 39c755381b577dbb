#include "piforge/wronskian.hpp"

#include <utility>

#include "piforge/errors.hpp"
#include "piforge/gamma.hpp"

namespace piforge {

wronskian_report wronskian_check(const bessel_order& nu, const big_real& z,
                                 const precision_context& ctx) {
  if (nu.excluded())
    throw invalid_order_error("wronskian_check: order " + nu.value().str() +
                              " has no ascending series");
  if (z.sign() <= 0 || z.is_nan())
    throw domain_error("wronskian_check: z must be positive");

  const big_real one(1L, ctx);
  const big_real zinv = one / z;

  // Descending side: SK = sum a_n z^-n and SKd = sum (n+1/2) a_n z^-n. Terms
  // are kept while they shrink (|a_{n+1}| < |a_n| z); the asymptotic series
  // is cut at its smallest term. Terminates exactly for half-integer orders.
  big_real sk(0L, ctx), skd(0L, ctx);
  big_real omitted_core(0L, ctx);  // |a_{K+1}| z^-(K+1), zero if terminating
  std::uint64_t trunc_k = 0;
  {
    auto s = a_coeff_stream(nu);
    big_real pw = one;  // z^-n for the current index
    const std::uint64_t cap = 16384;
    while (true) {
      const std::uint64_t n = s.index();
      const rational an = s.term();
      const big_real t = big_real(an, ctx) * pw;
      sk += t;
      skd += t * rational(2 * static_cast<long>(n) + 1, 2);
      trunc_k = n;
      s.advance();
      const rational next = s.term();
      if (next.is_zero()) break;
      if (n + 1 >= cap ||
          big_real(abs(next), ctx) >= big_real(abs(an), ctx) * z) {
        omitted_core = big_real(abs(next), ctx) * pw * zinv;
        break;
      }
      pw *= zinv;
    }
  }

  // Ascending side: SI = sum b_j z^j and SId = sum (j+nu) b_j z^j. Convergent
  // everywhere; stop after three consecutive terms below the precision floor
  // (three, because a single small term can precede larger ones early on).
  big_real si(0L, ctx), sid(0L, ctx);
  std::uint64_t trunc_i = 0;
  {
    auto s = b_coeff_stream(nu);
    big_real pz = one;  // z^j
    big_real sum_abs(0L, ctx);
    const big_real floor_eps =
        big_real::pow2(-static_cast<long>(ctx.working_bits()) - 8, ctx);
    int quiet = 0;
    while (quiet < 3) {
      const std::uint64_t j = s.index();
      const big_real t = big_real(s.term(), ctx) * pz;
      si += t;
      sid += t * (rational(static_cast<long>(j)) + nu.value());
      trunc_i = j;
      const big_real mag = abs(t);
      sum_abs += mag;
      quiet = (mag < sum_abs * floor_eps) ? quiet + 1 : 0;
      s.advance();
      pz *= z;
    }
  }

  // Kb = C_K z^-1/2 SK, Kb' = -C_K z^-3/2 SKd,
  // Ib = C_I z^nu  SI,  Ib' =  C_I z^(nu-1) SId,
  // with C_K = sqrt(pi/2) and C_I = 2^-nu / Gamma(nu+1).
  const big_real ck = big_real::sqrt_pi(ctx) / sqrt(big_real(2L, ctx));
  const big_real ci =
      one / (pow(big_real(2L, ctx), big_real(nu.value(), ctx)) *
             gamma(nu.value() + rational(1), ctx));
  const big_real zmh = one / sqrt(z);
  const big_real znu = pow(z, big_real(nu.value(), ctx));
  const big_real em2z = exp(big_real(-2L, ctx) * z);

  const big_real kb = ck * zmh * sk;
  const big_real kbp = -(ck * zmh * zinv * skd);
  const big_real ib = ci * znu * si;
  const big_real ibp = ci * znu * zinv * sid;

  big_real deviation = z * (kb * ibp - kbp * ib) * em2z - one;

  // The truncation error of the descending series is of the order of its
  // first dropped term Delta = C_K |a_{K+1}| z^-(K+3/2); the derivative
  // series drops Delta*(K+3/2)/z. Doubled for headroom, plus a rounding
  // floor. An estimate, not a certificate.
  const big_real delta = ck * zmh * omitted_core;
  const big_real deltap =
      delta * rational(2 * static_cast<long>(trunc_k) + 3, 2) * zinv;
  big_real bound =
      big_real(2L, ctx) * z * em2z * (delta * abs(ibp) + deltap * abs(ib)) +
      big_real::pow2(16 - static_cast<long>(ctx.working_bits()), ctx);

  return wronskian_report{std::move(deviation), std::move(bound), trunc_k,
                          trunc_i};
}

}  // namespace piforge
