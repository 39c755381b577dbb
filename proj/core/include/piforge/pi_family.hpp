#pragma once

#include <cstdint>
#include <vector>

#include "piforge/rational.hpp"
#include "piforge/real.hpp"
#include "piforge/term_stream.hpp"

namespace piforge {

// One member of the two-parameter family of series summing to 1/pi:
//   1/pi = sum_{n>=0} T_n(m,k),
//   T_n = (1/2)_{m+k} (2m)!/(m! 2^{2m})
//         * (m+1/2)_n <m-1/2>_n (m+1/2)_{k+n} (k+m+2n+1/2)
//           / (n! (k+n)! (2m+k+n)!).
// Terms are positive through n = m, then alternate in sign with strictly
// shrinking magnitude |T_n| ~ C n^-(m+k+1/2); convergence needs k >= 2.
struct family_params {
  unsigned m = 0;
  unsigned k = 2;
};

// Exact term T_n.
rational family_term(const family_params& p, std::uint64_t n);
rational_term_stream family_term_stream(const family_params& p);

// Basis factor f_k(n) of the m = 0 members in hypergeometric-cubed form,
//   1/pi = sum_n (-1)^n ((1/2)_n / n!)^3 f_k(n),
//   f_k(n) = (1/2)_k (n+1/2)_k (k+2n+1/2) / ((n+1)_k)^2,
// which is what makes weighted mixes over k close under the same sum.
rational combination_basis(unsigned k, std::uint64_t n);

struct evaluation_report {
  big_real value;
  big_real remainder_bound;  // |first omitted term|: a true tail bound once
                             // more than m+1 terms were summed
  std::uint64_t terms_used = 0;
  unsigned precision_bits = 0;
  bool converged = false;  // bound <= target * |value| reached within budget
};

// Terms needed scale like target^(-1/(m+k+1/2)), so small m+k at tight
// targets is astronomically expensive; the budget keeps that failure mode
// explicit (converged = false) instead of open-ended.
inline constexpr std::uint64_t default_term_budget = 1'200'000'000;

// Sums the (m,k) series until the first omitted term certifies the requested
// relative error, or the term budget runs out (converged stays false). The
// magnitude decrease that the certificate relies on is checked every step;
// a violation throws non_decreasing_terms_error. Requires 2 <= k <= 64,
// m <= 64, and a target above the floor 2^(16 - precision_bits) (below it,
// precision_exhausted_error). max_terms = 0 means the default budget.
evaluation_report eval_family(const family_params& p,
                              const big_real& target_rel_err,
                              const precision_context& ctx,
                              std::uint64_t max_terms = 0);

// Exact complex weight. All arithmetic is exact; division by zero throws.
struct complex_rational {
  rational re;
  rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  complex_rational& operator+=(const complex_rational& o);
  complex_rational& operator*=(const complex_rational& o);
  complex_rational& operator/=(const complex_rational& o);
  friend complex_rational operator+(complex_rational a, const complex_rational& b) { return a += b; }
  friend complex_rational operator*(complex_rational a, const complex_rational& b) { return a *= b; }
  friend complex_rational operator/(complex_rational a, const complex_rational& b) { return a /= b; }
  friend bool operator==(const complex_rational& a, const complex_rational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const complex_rational& a, const complex_rational& b) { return !(a == b); }

  big_real magnitude(const precision_context& ctx) const;  // sqrt(re^2 + im^2)
};

struct weighted_term {
  unsigned k = 2;
  complex_rational alpha;
};

// Weighted mix over distinct k in [2, 64]. Only the normalized weights
// alpha_k / sum(alpha) enter the evaluation, so scaling every alpha by one
// nonzero constant changes nothing, bit for bit. A zero weight sum throws
// zero_normalization_error.
class combination_spec {
 public:
  explicit combination_spec(std::vector<weighted_term> terms);

  const std::vector<weighted_term>& terms() const { return terms_; }
  // alpha_k / sum(alpha), exact; these sum to 1 by construction.
  std::vector<complex_rational> normalized_weights() const;

 private:
  std::vector<weighted_term> terms_;
};

struct combination_report {
  big_real value_re;
  big_real value_im;  // would vanish exactly; whatever is left is error and
                      // stays within remainder_bound
  big_real remainder_bound;
  std::uint64_t terms_used = 0;  // summed over all member series
  unsigned precision_bits = 0;
  bool converged = false;
};

// Evaluates sum_k w_k S(0,k) with w the normalized weights: every member
// sums to 1/pi and the weights sum to 1, so the mix is again 1/pi. Members
// run independently, each at a target share sized by |w_k| (heavy
// cancellation in the weights therefore raises the precision demanded and
// can trip the precision floor). Zero weights are absent members: no share,
// no run. max_terms caps each member (0 = default).
// A single weight reproduces eval_family for that k bit for bit.
combination_report eval_combination(const combination_spec& spec,
                                    const big_real& target_rel_err,
                                    const precision_context& ctx,
                                    std::uint64_t max_terms = 0);

}  // namespace piforge
