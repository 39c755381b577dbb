// Acceptance gate: one test case per criterion, each printing a single
// "ACCEPTANCE n: PASS/FAIL — detail" line beyond the doctest result. The
// criteria run against frozen tolerances; nothing here adapts to make a red
// check green. Criterion 2 restricts itself to cells reachable within
// PIFORGE_ACCEPT_TERM_BUDGET terms (default: the library's own budget) and
// reports any cell beyond it as a failure with the projected cost, rather
// than silently shrinking the grid.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <mpfr.h>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "piforge/bessel_coeffs.hpp"
#include "piforge/errors.hpp"
#include "piforge/factorials.hpp"
#include "piforge/gamma_quotient.hpp"
#include "piforge/heaviside.hpp"
#include "piforge/identities.hpp"
#include "piforge/pi_family.hpp"
#include "piforge/real.hpp"
#include "piforge/wronskian.hpp"

using namespace piforge;

namespace {

using clock_point = std::chrono::steady_clock::time_point;

clock_point clock_now() { return std::chrono::steady_clock::now(); }

double elapsed(clock_point t0) {
  return std::chrono::duration<double>(clock_now() - t0).count();
}

std::uint64_t accept_budget() {
  if (const char* e = std::getenv("PIFORGE_ACCEPT_TERM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(e, &end, 10);
    if (end != e && *end == '\0' && v > 0) return v;
  }
  return default_term_budget;
}

void verdict(int n, bool pass, const std::string& detail) {
  std::printf("ACCEPTANCE %d: %s — %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

// |T_{n+1}| from |T_n| by the same five single-word operations the evaluator
// uses, so replays see the evaluator's own rounding.
void advance_mag(big_real& tabs, big_real& prev, unsigned long m, unsigned long k,
                 unsigned long nn) {
  const unsigned long n1 =
      (2 * m + 2 * nn + 1) * (nn >= m ? 2 * (nn - m) + 1 : 2 * (m - nn) - 1);
  const unsigned long n2 =
      (2 * m + 2 * k + 2 * nn + 1) * (2 * k + 2 * m + 4 * nn + 5);
  const unsigned long d1 = (nn + 1) * (k + nn + 1);
  const unsigned long d2 = (2 * m + k + nn + 1) * (2 * k + 2 * m + 4 * nn + 1);
  mpfr_swap(prev.raw(), tabs.raw());
  mpfr_mul_ui(tabs.raw(), prev.raw(), n1, MPFR_RNDN);
  mpfr_mul_ui(tabs.raw(), tabs.raw(), n2, MPFR_RNDN);
  mpfr_div_ui(tabs.raw(), tabs.raw(), d1, MPFR_RNDN);
  mpfr_div_ui(tabs.raw(), tabs.raw(), d2, MPFR_RNDN);
  mpfr_div_2ui(tabs.raw(), tabs.raw(), 3, MPFR_RNDN);
}

// |T_n0| by floating recurrence; cheap cost probe for the n^-(m+k+1/2) tail.
double term_magnitude(const family_params& p, unsigned long n0,
                      const precision_context& ctx) {
  big_real tabs(ctx), prev(ctx);
  mpfr_set_q(tabs.raw(), family_term(p, 0).raw(), MPFR_RNDN);
  for (unsigned long nn = 0; nn < n0; ++nn) advance_mag(tabs, prev, p.m, p.k, nn);
  return tabs.to_double();
}

// Replays the evaluator's update and checks the alternating remainder bound
// |S_n - final| <= |T_{n+1}| at every step n in (m, last].
bool prefix_certificate_ok(const family_params& p, const big_real& final_value,
                           std::uint64_t last, const precision_context& ctx) {
  const unsigned long m = p.m, k = p.k;
  big_real tabs(ctx), prev(ctx), sum(ctx);
  mpfr_set_q(tabs.raw(), family_term(p, 0).raw(), MPFR_RNDN);
  mpfr_set(sum.raw(), tabs.raw(), MPFR_RNDN);
  // final_value itself is only 1e-30-accurate; pad accordingly
  const big_real pad = abs(final_value) * big_real::pow2(-97, ctx);
  const big_real one_plus = big_real(1L, ctx) + big_real::pow2(-40, ctx);
  std::uint64_t n = 0;
  while (n < last) {
    advance_mag(tabs, prev, m, k, n);  // now tabs = |T_{n+1}|, sum = S_n
    if (n > m && !(abs(sum - final_value) <= tabs * one_plus + pad)) return false;
    ++n;
    if (n > m && ((n - m) & 1u) != 0)
      mpfr_sub(sum.raw(), sum.raw(), tabs.raw(), MPFR_RNDN);
    else
      mpfr_add(sum.raw(), sum.raw(), tabs.raw(), MPFR_RNDN);
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::string all;
  std::string line;
  while (std::getline(f, line)) all += line + "\n";
  return all;
}

}  // namespace

TEST_CASE("criterion 1: exact identity certification through the cli") {
  const char* bin = std::getenv("PIFORGE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PIFORGE_BIN must point at the piforge binary");
  const auto t0 = clock_now();
  bool pass = true;
  std::string bad;
  struct job {
    const char* id;
    std::size_t cells;
  };
  // 51 x 101 rectangles; the third starts rows at k = m
  for (const job j : {job{"iv2", 5151}, {"iv1", 5151}, {"iv3", 3876}}) {
    const std::string out = std::string("/tmp/piforge_accept_") + j.id + ".csv";
    const std::string cmd = std::string(bin) + " identity --id " + j.id +
                            " --m-max 50 --k-max 100 --format csv --out " + out;
    const int rc = std::system(cmd.c_str());
    const int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream f(out);
    std::string line;
    std::getline(f, line);  // header
    std::size_t rows = 0, held = 0;
    while (std::getline(f, line)) {
      ++rows;
      if (line.size() >= 5 && line.compare(line.size() - 5, 5, ",true") == 0) ++held;
    }
    std::remove(out.c_str());
    if (code != 0 || rows != j.cells || held != j.cells) {
      pass = false;
      bad += std::string(j.id) + ": exit " + std::to_string(code) + ", " +
             std::to_string(held) + "/" + std::to_string(rows) + " held of " +
             std::to_string(j.cells) + " expected; ";
    }
  }
  char b[200];
  std::snprintf(b, sizeof b,
                "identity sweeps to m=50, k=100 (5151+5151+3876 cells) exit 0 with "
                "every certificate exact in %.1f s single-threaded",
                elapsed(t0));
  verdict(1, pass, pass ? b : bad);
  CHECK_MESSAGE(pass, bad);
}

TEST_CASE("criterion 2: grid-wide 1e-30 certification against independent pi") {
  const precision_context ctx(256);
  const std::uint64_t budget = accept_budget();
  const big_real target = big_real::from_decimal("1e-30", ctx);
  const big_real invpi = big_real(1L, ctx) / big_real::pi(ctx);
  const big_real rel_limit = invpi * target * big_real::from_decimal("1.001", ctx);
  std::size_t cells = 0, certified = 0;
  std::uint64_t total_terms = 0;
  double run_seconds = 0;
  std::string bad;
  struct costed {
    unsigned m, k;
    double need;
  };
  std::vector<costed> beyond;
  for (unsigned m = 0; m <= 10; ++m) {
    for (unsigned k = 2; k <= 20; ++k) {
      ++cells;
      const family_params p{m, k};
      // certified stop index from |T_n| ~ C n^-(m+k+1/2), anchored at n = 4096
      const double s = m + k + 0.5;
      const double mag = term_magnitude(p, 4096, ctx);
      const double need = 4096.0 * std::pow(mag / (1e-30 * 0.3183), 1.0 / s);
      if (need > 3.0 * static_cast<double>(budget)) {
        beyond.push_back({m, k, need});
        continue;
      }
      const auto c0 = clock_now();
      const evaluation_report r = eval_family(p, target, ctx, budget);
      run_seconds += elapsed(c0);
      total_terms += r.terms_used;
      const big_real slack = big_real(static_cast<long>(r.terms_used), ctx) *
                             big_real::pow2(-286, ctx) * abs(r.value);
      const std::uint64_t prefix =
          std::min<std::uint64_t>(r.terms_used - 1, 1u << 18);
      const bool ok = r.converged &&
                      r.remainder_bound <= target * abs(r.value) &&
                      abs(r.value - invpi) <= r.remainder_bound + slack &&
                      abs(r.value - invpi) <= rel_limit &&
                      prefix_certificate_ok(p, r.value, prefix, ctx);
      if (ok) {
        ++certified;
      } else {
        char fb[120];
        std::snprintf(fb, sizeof fb, "(m=%u,k=%u) converged=%d failed a check; ", m,
                      k, r.converged ? 1 : 0);
        bad += fb;
      }
    }
  }
  const double rate = run_seconds > 0 ? static_cast<double>(total_terms) / run_seconds
                                      : 0.0;
  for (const costed& c : beyond) {
    char fb[240];
    std::snprintf(fb, sizeof fb,
                  "(m=%u,k=%u) needs ~%.1e terms for 1e-30, ~%.0f h at the measured "
                  "%.1e terms/s, beyond the %.1e-term budget "
                  "(PIFORGE_ACCEPT_TERM_BUDGET to override); ",
                  c.m, c.k, c.need, rate > 0 ? c.need / rate / 3600.0 : -1.0, rate,
                  static_cast<double>(budget));
    bad += fb;
  }
  const bool pass = certified == cells;
  char head[240];
  std::snprintf(head, sizeof head,
                "%zu/%zu cells (m<=10, k in [2,20]) certified to 1e-30 at 256 bits, "
                "remainder bound re-checked on the first %u steps of every run "
                "(%.2e terms, %.0f s)",
                certified, cells, 1u << 18, static_cast<double>(total_terms),
                run_seconds);
  const std::string detail = std::string(head) + (bad.empty() ? "" : " — " + bad);
  verdict(2, pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("criterion 3: alternation and strict decrease, exactly") {
  std::uint64_t violations = 0;
  std::size_t cells = 0;
  for (unsigned m = 0; m <= 10; ++m) {
    for (unsigned k = 2; k <= 20; ++k) {
      ++cells;
      auto st = family_term_stream(family_params{m, k});
      rational prev = st.advance_to(m);
      for (std::uint64_t n = m + 1; n <= m + 200; ++n) {
        st.advance();
        const rational t = st.term();
        const bool sign_ok = t.sign() == (((n - m) % 2) ? -1 : 1);
        const bool mono_ok = abs(t) < abs(prev);
        if (!sign_ok || !mono_ok) ++violations;
        prev = t;
      }
    }
  }
  const bool pass = violations == 0;
  char b[200];
  std::snprintf(b, sizeof b,
                "exact rational terms over %zu cells, n in (m, m+200]: signs "
                "alternate and magnitudes strictly decrease; %llu violations",
                cells, static_cast<unsigned long long>(violations));
  verdict(3, pass, b);
  CHECK(pass);
}

TEST_CASE("criterion 4: randomized weighted mixes converge to 1/pi") {
  const precision_context ctx(256);
  const big_real target = big_real::from_decimal("1e-25", ctx);
  const big_real invpi = big_real(1L, ctx) / big_real::pi(ctx);
  const big_real slack = invpi * big_real::pow2(-200, ctx);
  const big_real rel_limit = invpi * target * big_real::from_decimal("1.000001", ctx);
  std::mt19937_64 rng(20260816ull);  // frozen seed: the 20 sets are fixtures
  std::uniform_int_distribution<unsigned> size_d(1, 5);
  std::uniform_int_distribution<unsigned> k_d(3, 12);
  std::uniform_int_distribution<long> num_d(-6, 6);
  std::uniform_int_distribution<long> den_d(1, 4);
  std::uniform_int_distribution<int> im_roll(0, 2);
  bool pass = true;
  std::string bad;
  std::size_t complex_sets = 0, single_sets = 0;
  std::uint64_t total_terms = 0;
  for (int set = 0; set < 20; ++set) {
    std::vector<weighted_term> ws;
    while (true) {
      ws.clear();
      const unsigned size = set == 0 ? 1 : size_d(rng);  // guarantee one single
      std::vector<unsigned> ks;
      while (ks.size() < size) {
        const unsigned k = k_d(rng);
        bool dup = false;
        for (unsigned e : ks) dup = dup || e == k;
        if (!dup) ks.push_back(k);
      }
      complex_rational tot;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const rational re(num_d(rng), den_d(rng));
        rational im(0);
        // set 1 leads with a guaranteed complex entry; others roll for it
        if ((set == 1 && i == 0) || (set != 0 && im_roll(rng) == 0))
          im = rational(num_d(rng), den_d(rng));
        ws.push_back({ks[i], {re, im}});
        tot += ws.back().alpha;
      }
      if (tot.is_zero()) continue;  // not normalizable; redraw
      // keep normalized weights tame: |w|^2 <= 64 for every member
      const rational t2 = tot.re * tot.re + tot.im * tot.im;
      bool tame = true;
      for (const auto& w : ws) {
        const rational a2 = w.alpha.re * w.alpha.re + w.alpha.im * w.alpha.im;
        tame = tame && a2 <= rational(64) * t2;
      }
      if (tame) break;
    }
    bool has_im = false;
    for (const auto& w : ws) has_im = has_im || !w.alpha.im.is_zero();
    if (has_im) ++complex_sets;
    const combination_spec spec(ws);
    const combination_report r = eval_combination(spec, target, ctx);
    total_terms += r.terms_used;
    bool ok = r.converged && abs(r.value_re - invpi) <= rel_limit + slack &&
              abs(r.value_im) <= r.remainder_bound + slack;
    if (ws.size() == 1) {
      ++single_sets;
      const evaluation_report f = eval_family(family_params{0, ws[0].k}, target, ctx);
      const big_real two_ulp =
          big_real::pow2(mpfr_get_exp(f.value.raw()) -
                             static_cast<long>(ctx.working_bits()) + 1,
                         ctx);
      ok = ok && abs(r.value_re - f.value) <= two_ulp;
    }
    if (!ok) {
      pass = false;
      bad += "set " + std::to_string(set) + " failed; ";
    }
  }
  pass = pass && complex_sets >= 1 && single_sets >= 1;
  char b[240];
  std::snprintf(b, sizeof b,
                "20 seeded mixes (sizes 1-5, k in [3,12], %zu with complex weights, "
                "%zu single-weight) each within 1e-25 of 1/pi at 256 bits, imaginary "
                "parts under the certified bound, singles within 2 ulp of the member "
                "run (%.1e terms)",
                complex_sets, single_sets, static_cast<double>(total_terms));
  verdict(4, pass, pass ? b : bad);
  CHECK_MESSAGE(pass, bad);
}

TEST_CASE("criterion 5: coefficient recurrence residuals are identically zero") {
  bool pass = true;
  for (long mm = 0; mm <= 3; ++mm) {
    const bessel_order nu(rational(2 * mm + 1, 2));
    const auto res = recurrence_residuals(nu, 50);
    pass = pass && res.size() == 50;
    for (const auto& r : res) pass = pass && r.is_zero();
  }
  verdict(5, pass,
          "(k+nu-1/2) c_k - 2 c_{k-1} = 0 exactly for nu in {1/2,3/2,5/2,7/2}, "
          "k = 1..50");
  CHECK(pass);
}

TEST_CASE("criterion 6: terminating expansions reproduce the exact quotient") {
  const precision_context ctx(256);
  const big_real tol = big_real::pow2(-244, ctx);
  bool pass = true;
  std::string bad;
  for (unsigned long m = 0; m <= 10; ++m) {
    for (unsigned long k = 0; k <= 20; ++k) {
      const bessel_order nu(rational(2 * static_cast<long>(m) + 1, 2));
      const auto d = gamma_quotient_expansion(nu, k, m + 4, ctx);
      // Gamma(m+3/2)/Gamma(m+k+1) = (1/2)_{m+1} sqrt(pi) / (m+k)!
      const rational ratio = rising_factorial(rational(1, 2), m + 1) /
                             rational(factorial(m + k), mpz_class(1));
      const big_real exact = big_real(ratio, ctx) * big_real::sqrt_pi(ctx);
      const big_real got = d.partial_sums[d.min_term_index];
      const bool ok = abs(got - exact) / exact <= tol && d.best_relative_error <= tol;
      if (!ok) {
        pass = false;
        bad += "(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ") off; ";
      }
    }
  }
  verdict(6, pass,
          pass ? "nu = m+1/2 for m <= 10, k <= 20: completed sums match "
                 "(1/2)_{m+1} sqrt(pi)/(m+k)! within 2^-244 at 256 bits"
               : bad);
  CHECK_MESSAGE(pass, bad);
}

TEST_CASE("criterion 7: optimal-cut error improves with k at nu = 1/4") {
  const precision_context ctx(256);
  const bessel_order nu = bessel_order::parse("1/4");
  const big_real e5 = gamma_quotient_expansion(nu, 5, 120, ctx).best_relative_error;
  const big_real e20 = gamma_quotient_expansion(nu, 20, 120, ctx).best_relative_error;
  const big_real e40 = gamma_quotient_expansion(nu, 40, 120, ctx).best_relative_error;
  const bool pass = e20 < e5 && e40 < e20;
  char b[240];
  std::snprintf(b, sizeof b,
                "best relative error at 256 bits: k=5 %.3e, k=20 %.3e, k=40 %.3e — "
                "strictly improving (the expansion turns useful around k ~ 10; "
                "reported as data, not asserted)",
                e5.to_double(), e20.to_double(), e40.to_double());
  verdict(7, pass, b);
  CHECK(pass);
}

TEST_CASE("criterion 8: wronskian identity from the two scaled series") {
  const precision_context ctx(128);
  const big_real lim = big_real::from_decimal("1e-25", ctx);
  bool pass = true;
  std::string bad;
  for (const char* nutext : {"1/2", "3/2"}) {
    for (const char* ztext : {"2", "5", "10"}) {
      const auto r = wronskian_check(bessel_order::parse(nutext),
                                     big_real::from_decimal(ztext, ctx), ctx);
      if (!(abs(r.deviation) <= lim)) {
        pass = false;
        bad += std::string("nu=") + nutext + " z=" + ztext + " off; ";
      }
    }
  }
  const auto r0 = wronskian_check(bessel_order::parse("0"),
                                  big_real::from_decimal("30", ctx), ctx);
  const bool r0_ok = abs(r0.deviation) <= r0.first_omitted_bound;
  pass = pass && r0_ok;
  char b[240];
  std::snprintf(b, sizeof b,
                "z W - 1 within 1e-25 at 128 bits for nu=1/2,3/2 at z=2,5,10; at "
                "nu=0, z=30 the deviation %.2e sits inside the first-omitted-term "
                "bound %.2e (cut at n=%llu)",
                r0.deviation.to_double(), r0.first_omitted_bound.to_double(),
                static_cast<unsigned long long>(r0.trunc_k));
  verdict(8, pass, pass ? b : bad + (r0_ok ? "" : "nu=0 bound violated"));
  CHECK_MESSAGE(pass, bad);
}

TEST_CASE("criterion 9: two-sided exponential reduction") {
  const precision_context ctx(256);
  bool pass = true;
  std::string bad;
  // integer shifts: term-for-term the plain exponential partial sum
  for (const char* ttext : {"1", "5"}) {
    const big_real t = big_real::from_decimal(ttext, ctx);
    for (long d = -3; d <= 3; ++d) {
      const unsigned long kp = 60, kn = 10;
      const big_real got = heaviside_exp(t, rational(d), kp, kn, ctx);
      const long jlo = std::max<long>(0, d - static_cast<long>(kn));
      const long jhi = d + static_cast<long>(kp);
      big_real want(0L, ctx), p(1L, ctx);
      for (long j = 0; j <= jhi; ++j) {
        if (j >= jlo)
          want += p * rational(mpz_class(1), factorial(static_cast<unsigned long>(j)));
        p *= t;
      }
      const long nterms = jhi - jlo + 1;
      const big_real tol =
          big_real(2 * nterms, ctx) * big_real::pow2(-256, ctx) * want;
      if (!(abs(got - want) <= tol)) {
        pass = false;
        bad += "t=" + std::string(ttext) + " delta=" + std::to_string(d) + " off; ";
      }
    }
  }
  // half-integer shift against the exponential oracle, optimal tail cut
  const big_real t30 = big_real::from_decimal("30", ctx);
  const unsigned long kn = heaviside_optimal_tail(t30, rational(1, 2), ctx);
  const big_real got = heaviside_exp(t30, rational(1, 2), 200, kn, ctx);
  const big_real rel = abs(got - exp(t30)) / exp(t30);
  const bool half_ok = rel <= big_real::from_decimal("1e-15", ctx);
  pass = pass && half_ok;
  char b[240];
  std::snprintf(b, sizeof b,
                "integer shifts -3..3 at t=1,5 match the exponential partial sums "
                "to 2 ulp/term at 256 bits; delta=1/2, t=30 with the optimal %lu-term "
                "tail reaches rel err %.2e <= 1e-15",
                kn, rel.to_double());
  verdict(9, pass, pass ? b : bad + (half_ok ? "" : "half-integer case off"));
  CHECK_MESSAGE(pass, bad);
}
