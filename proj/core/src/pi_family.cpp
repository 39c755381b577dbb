#include "piforge/pi_family.hpp"

#include <cstddef>
#include <utility>

#include "piforge/errors.hpp"
#include "piforge/factorials.hpp"

namespace piforge {

namespace {

// Past this index the paired per-step integer factors no longer fit in
// 64 bits (the largest pair grows like 8 n^2); budgets are clamped to it.
constexpr std::uint64_t term_index_limit = 1'500'000'000;

}  // namespace

rational family_term(const family_params& p, std::uint64_t n) {
  const unsigned long m = p.m, k = p.k;
  const rational mph(2 * static_cast<long>(m) + 1, 2);  // m + 1/2
  const rational mmh(2 * static_cast<long>(m) - 1, 2);  // m - 1/2

  rational t = rising_factorial(rational(1, 2), m + k);
  t *= rational(factorial(2 * m), factorial(m));
  t *= rational(2).pow_int(-2 * static_cast<long>(m));
  t *= rising_factorial(mph, n);
  t *= falling_factorial(mmh, n);
  t *= rising_factorial(mph, k + n);
  t *= rational(2 * static_cast<long>(k + m) + 4 * static_cast<long>(n) + 1, 2);
  t /= rational(factorial(n) * factorial(k + n) * factorial(2 * m + k + n),
                mpz_class(1));
  return t;
}

rational_term_stream family_term_stream(const family_params& p) {
  const long m = p.m, k = p.k;
  return rational_term_stream(
      family_term(p, 0), [m, k](std::uint64_t idx) {
        const long n = static_cast<long>(idx);
        mpz_class num = mpz_class(2 * m + 2 * n + 1) * (2 * m - 2 * n - 1) *
                        (2 * m + 2 * k + 2 * n + 1) *
                        (2 * k + 2 * m + 4 * n + 5);
        mpz_class den = mpz_class(8) * (n + 1) * (k + n + 1) *
                        (2 * m + k + n + 1) * (2 * k + 2 * m + 4 * n + 1);
        return rational(num, den);
      });
}

rational combination_basis(unsigned k, std::uint64_t n) {
  const rational nph(2 * static_cast<long>(n) + 1, 2);  // n + 1/2
  const rational den = rising_factorial(rational(static_cast<long>(n) + 1), k);
  return rising_factorial(rational(1, 2), k) * rising_factorial(nph, k) *
         rational(2 * static_cast<long>(k) + 4 * static_cast<long>(n) + 1, 2) /
         (den * den);
}

evaluation_report eval_family(const family_params& p, const big_real& target,
                              const precision_context& ctx,
                              std::uint64_t max_terms) {
  if (p.k < 2)
    throw domain_error("eval_family: k must be at least 2, the series does not converge below that");
  if (p.m > 64 || p.k > 64)
    throw domain_error("eval_family: m and k are limited to 64");
  if (target.sign() <= 0 || target.is_nan())
    throw domain_error("eval_family: target relative error must be positive");
  if (!(target > big_real::pow2(16 - static_cast<long>(ctx.precision_bits()), ctx)))
    throw precision_exhausted_error(
        "eval_family: target below the certifiable floor 2^(16-precision_bits)");

  if (max_terms == 0) max_terms = default_term_budget;
  if (max_terms > term_index_limit) max_terms = term_index_limit;

  const unsigned long m = p.m, k = p.k;
  evaluation_report rep{big_real(ctx), big_real(ctx), 0, ctx.precision_bits(),
                        false};

  // Hot loop state: tabs = |T_n|, advanced by the exact integer ratio
  //   |T_{n+1}| / |T_n| = n1 n2 / (8 d1 d2)
  // in five single-word mpfr operations; the sign ((-1)^(n-m) past n = m) is
  // applied analytically at accumulation time.
  big_real tabs(ctx), prev(ctx), sum(ctx), thr(ctx), tmp(ctx);
  mpfr_set_q(tabs.raw(), family_term(p, 0).raw(), MPFR_RNDN);
  mpfr_set(sum.raw(), tabs.raw(), MPFR_RNDN);

  // Cached stop threshold 0.9 * target * |sum|: cheap to compare against
  // every step, refreshed periodically; an exact check gates the actual stop.
  auto refresh_thr = [&]() {
    mpfr_abs(tmp.raw(), sum.raw(), MPFR_RNDN);
    mpfr_mul(thr.raw(), tmp.raw(), target.raw(), MPFR_RNDN);
    mpfr_mul_d(thr.raw(), thr.raw(), 0.9, MPFR_RNDN);
  };
  refresh_thr();

  std::uint64_t n = 0;  // highest index summed so far
  unsigned steps_since_refresh = 0;
  while (true) {
    const unsigned long nn = n;
    const unsigned long n1 =
        (2 * m + 2 * nn + 1) * (nn >= m ? 2 * (nn - m) + 1 : 2 * (m - nn) - 1);
    const unsigned long n2 =
        (2 * m + 2 * k + 2 * nn + 1) * (2 * k + 2 * m + 4 * nn + 5);
    const unsigned long d1 = (nn + 1) * (k + nn + 1);
    const unsigned long d2 =
        (2 * m + k + nn + 1) * (2 * k + 2 * m + 4 * nn + 1);
    mpfr_swap(prev.raw(), tabs.raw());
    mpfr_mul_ui(tabs.raw(), prev.raw(), n1, MPFR_RNDN);
    mpfr_mul_ui(tabs.raw(), tabs.raw(), n2, MPFR_RNDN);
    mpfr_div_ui(tabs.raw(), tabs.raw(), d1, MPFR_RNDN);
    mpfr_div_ui(tabs.raw(), tabs.raw(), d2, MPFR_RNDN);
    mpfr_div_2ui(tabs.raw(), tabs.raw(), 3, MPFR_RNDN);
    if (nn >= m && mpfr_cmp(tabs.raw(), prev.raw()) >= 0)
      throw non_decreasing_terms_error(
          "eval_family: term magnitudes stopped shrinking in the alternating range");

    // T_{n+1} is ready; the sum covers indices 0..n. Past n = m the tail
    // alternates under shrinking magnitudes, so |S - S_n| <= |T_{n+1}|.
    if (n > m) {
      if (++steps_since_refresh >= 4096) {
        refresh_thr();
        steps_since_refresh = 0;
      }
      if (mpfr_cmp(tabs.raw(), thr.raw()) <= 0) {
        mpfr_abs(tmp.raw(), sum.raw(), MPFR_RNDN);
        mpfr_mul(tmp.raw(), tmp.raw(), target.raw(), MPFR_RNDN);
        if (mpfr_cmp(tabs.raw(), tmp.raw()) <= 0) {
          rep.converged = true;
          break;
        }
        refresh_thr();
        steps_since_refresh = 0;
      }
    }
    if (n + 1 >= max_terms) break;  // budget: the next term would not fit

    ++n;
    const bool negative = n > m && ((n - m) & 1u) != 0;
    if (negative)
      mpfr_sub(sum.raw(), sum.raw(), tabs.raw(), MPFR_RNDN);
    else
      mpfr_add(sum.raw(), sum.raw(), tabs.raw(), MPFR_RNDN);
  }

  rep.value = sum;
  rep.remainder_bound = tabs;
  rep.terms_used = n + 1;
  return rep;
}

complex_rational& complex_rational::operator+=(const complex_rational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

complex_rational& complex_rational::operator*=(const complex_rational& o) {
  rational r = re * o.re - im * o.im;
  rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

complex_rational& complex_rational::operator/=(const complex_rational& o) {
  const rational n2 = o.re * o.re + o.im * o.im;
  if (n2.is_zero()) throw domain_error("complex_rational: division by zero");
  rational r = (re * o.re + im * o.im) / n2;
  rational i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

big_real complex_rational::magnitude(const precision_context& ctx) const {
  return sqrt(big_real(re * re + im * im, ctx));
}

combination_spec::combination_spec(std::vector<weighted_term> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty())
    throw domain_error("combination_spec: at least one weight is required");
  complex_rational total;
  for (const auto& t : terms_) {
    if (t.k < 2 || t.k > 64)
      throw domain_error("combination_spec: k must lie in [2, 64]");
    total += t.alpha;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].k == terms_[j].k)
        throw domain_error("combination_spec: duplicate k in the weight list");
  if (total.is_zero())
    throw zero_normalization_error("combination_spec: weights sum to zero");
}

std::vector<complex_rational> combination_spec::normalized_weights() const {
  complex_rational total;
  for (const auto& t : terms_) total += t.alpha;
  std::vector<complex_rational> w;
  w.reserve(terms_.size());
  for (const auto& t : terms_) w.push_back(t.alpha / total);
  return w;
}

combination_report eval_combination(const combination_spec& spec,
                                    const big_real& target,
                                    const precision_context& ctx,
                                    std::uint64_t max_terms) {
  if (target.sign() <= 0 || target.is_nan())
    throw domain_error("eval_combination: target relative error must be positive");

  const auto& terms = spec.terms();
  const auto w = spec.normalized_weights();
  // Zero weights are absent members: they get no target share and no run.
  long active = 0;
  for (const auto& wi : w) active += wi.is_zero() ? 0 : 1;
  const big_real kcount(active, ctx);
  const big_real floor_eps =
      big_real::pow2(16 - static_cast<long>(ctx.precision_bits()), ctx);

  combination_report rep{big_real(0L, ctx), big_real(0L, ctx),
                         big_real(0L, ctx), 0,          ctx.precision_bits(),
                         true};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (w[i].is_zero()) continue;  // contributes nothing, costs nothing
    // Member share of the target: tau_i = target / (K |w_i|), so the
    // weighted member bounds add up to about target * (1/pi).
    const big_real wmag = w[i].magnitude(ctx);
    const big_real tau = target / (kcount * wmag);
    if (!(tau > floor_eps))
      throw precision_exhausted_error(
          "eval_combination: normalized weights push a member target below "
          "the precision floor; raise precision_bits");

    const family_params p{0, terms[i].k};
    const evaluation_report r = eval_family(p, tau, ctx, max_terms);
    rep.converged = rep.converged && r.converged;
    rep.terms_used += r.terms_used;
    rep.value_re += r.value * w[i].re;
    rep.value_im += r.value * w[i].im;
    rep.remainder_bound += wmag * r.remainder_bound;
  }
  return rep;
}

}  // namespace piforge
