#include "piforge/gamma.hpp"

#include <bit>
#include <cmath>

#include "piforge/errors.hpp"

namespace piforge {

unsigned spouge_parameter(const precision_context& ctx) {
  // (2pi)^-(a+1/2)/sqrt(a) < 2^-(pb+8) by construction of a.
  constexpr long double two_pi = 6.283185307179586476925286766559L;
  long double bits = static_cast<long double>(ctx.precision_bits());
  long double a = std::ceil(bits * std::log(2.0L) / std::log(two_pi));
  return static_cast<unsigned>(a) + 2;
}

namespace {

// Spouge series for Gamma(z+1), valid for z >= 0:
//   Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [ sqrt(2pi) + sum_k c_k/(z+k) ]
// with c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!.
// The alternating terms peak near k = 0.22a at ~e^(1.28a) while the bracket
// itself can shrink to sqrt(2pi) as z grows, so the cancellation budget is
// ~1.85a bits and must scale with a, not with log(a).
void spouge_gamma_zplus1(mpfr_t out, mpfr_srcptr z, unsigned a, mpfr_prec_t wp) {
  mpfr_t sum, ck, tmp, e1;
  mpfr_inits2(wp, sum, ck, tmp, e1, nullptr);

  // sqrt(2pi)
  mpfr_const_pi(sum, MPFR_RNDN);
  mpfr_mul_2ui(sum, sum, 1, MPFR_RNDN);
  mpfr_sqrt(sum, sum, MPFR_RNDN);

  mpz_class kfac(1);  // (k-1)!
  for (unsigned k = 1; k < a; ++k) {
    if (k > 1) kfac *= (k - 1);
    // ck = (a-k)^(k-1/2) e^(a-k) / (k-1)!
    mpfr_set_ui(tmp, a - k, MPFR_RNDN);
    mpfr_pow_ui(ck, tmp, k, MPFR_RNDN);
    mpfr_sqrt(tmp, tmp, MPFR_RNDN);
    mpfr_div(ck, ck, tmp, MPFR_RNDN);
    mpfr_set_ui(e1, a - k, MPFR_RNDN);
    mpfr_exp(e1, e1, MPFR_RNDN);
    mpfr_mul(ck, ck, e1, MPFR_RNDN);
    mpfr_div_z(ck, ck, kfac.get_mpz_t(), MPFR_RNDN);
    // sum += (-1)^(k-1) ck / (z+k)
    mpfr_add_ui(tmp, z, k, MPFR_RNDN);
    mpfr_div(ck, ck, tmp, MPFR_RNDN);
    if (k % 2 == 0) mpfr_neg(ck, ck, MPFR_RNDN);
    mpfr_add(sum, sum, ck, MPFR_RNDN);
  }

  // (z+a)^(z+1/2) e^-(z+a) * sum
  mpfr_add_ui(tmp, z, a, MPFR_RNDN);        // z+a
  mpfr_set(e1, z, MPFR_RNDN);
  mpfr_add_d(e1, e1, 0.5, MPFR_RNDN);       // z+1/2
  mpfr_pow(out, tmp, e1, MPFR_RNDN);
  mpfr_neg(tmp, tmp, MPFR_RNDN);
  mpfr_exp(tmp, tmp, MPFR_RNDN);
  mpfr_mul(out, out, tmp, MPFR_RNDN);
  mpfr_mul(out, out, sum, MPFR_RNDN);

  mpfr_clears(sum, ck, tmp, e1, nullptr);
}

}  // namespace

big_real gamma(const big_real& x, const precision_context& ctx) {
  if (x.is_nan()) throw domain_error("gamma: NaN argument");
  if (x.is_integer() && x.sign() <= 0)
    throw pole_error("gamma: pole at non-positive integer " + x.str(8));

  const unsigned a = spouge_parameter(ctx);
  const mpfr_prec_t wp = ctx.working_bits() + 48 + std::bit_width(a) +
                         static_cast<mpfr_prec_t>((1850u * a + 999u) / 1000u);

  mpfr_t xw, z, g, p, f;
  mpfr_inits2(wp, xw, z, g, p, f, nullptr);
  mpfr_set(xw, x.raw(), MPFR_RNDN);

  // Lift x below 1 into the Spouge range: Gamma(x) = Gamma(x+n)/prod_{i<n}(x+i).
  unsigned long shift = 0;
  if (mpfr_cmp_ui(xw, 1) < 0) {
    mpfr_t d;
    mpfr_init2(d, wp);
    mpfr_ui_sub(d, 1, xw, MPFR_RNDN);
    mpfr_ceil(d, d);
    shift = mpfr_get_ui(d, MPFR_RNDN);
    mpfr_clear(d);
  }

  mpfr_add_ui(z, xw, shift, MPFR_RNDN);   // x + n >= 1
  mpfr_sub_ui(z, z, 1, MPFR_RNDN);        // z >= 0
  spouge_gamma_zplus1(g, z, a, wp);

  if (shift > 0) {
    mpfr_set_ui(p, 1, MPFR_RNDN);
    for (unsigned long i = 0; i < shift; ++i) {
      mpfr_add_ui(f, xw, i, MPFR_RNDN);
      mpfr_mul(p, p, f, MPFR_RNDN);
    }
    mpfr_div(g, g, p, MPFR_RNDN);
  }

  big_real out(ctx);
  mpfr_set(out.raw(), g, MPFR_RNDN);
  mpfr_clears(xw, z, g, p, f, nullptr);
  return out;
}

big_real gamma(const rational& x, const precision_context& ctx) {
  if (x.is_nonpositive_integer())
    throw pole_error("gamma: pole at non-positive integer " + x.str());
  return gamma(big_real(x, ctx), ctx);
}

}  // namespace piforge
