#include "doctest.h"

#include <mpfr.h>

#include <vector>

#include "piforge/errors.hpp"
#include "piforge/pi_family.hpp"

using namespace piforge;

TEST_CASE("complex weight arithmetic is exact") {
  const complex_rational a{rational(1, 2), rational(3)};
  const complex_rational b{rational(2), rational(-1)};
  const complex_rational sum{rational(5, 2), rational(2)};
  const complex_rational prod{rational(4), rational(11, 2)};
  CHECK(a + b == sum);
  CHECK(a * b == prod);
  const complex_rational q = a / b;
  CHECK(q * b == a);
  CHECK_THROWS_AS(a / complex_rational{}, domain_error);
  const precision_context ctx(64);
  const complex_rational three_four{rational(3), rational(-4)};
  CHECK(three_four.magnitude(ctx) == big_real(5L, ctx));
  CHECK(complex_rational{}.is_zero());
  CHECK_FALSE(a.is_zero());
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((combination_spec({})), domain_error);
  std::vector<weighted_term> bad_k{{1, {rational(1), rational(0)}}};
  CHECK_THROWS_AS((combination_spec(bad_k)), domain_error);
  std::vector<weighted_term> dup{{2, {rational(1), rational(0)}},
                                 {2, {rational(1), rational(0)}}};
  CHECK_THROWS_AS((combination_spec(dup)), domain_error);
  std::vector<weighted_term> cancel{{2, {rational(1), rational(2)}},
                                    {3, {rational(-1), rational(-2)}}};
  CHECK_THROWS_AS((combination_spec(cancel)), zero_normalization_error);
}

TEST_CASE("normalized weights sum to one exactly") {
  const std::vector<weighted_term> ws{{2, {rational(1, 3), rational(1)}},
                                      {4, {rational(-5), rational(0)}},
                                      {7, {rational(2), rational(-1, 2)}}};
  const combination_spec spec(ws);
  complex_rational sum;
  for (const auto& w : spec.normalized_weights()) sum += w;
  CHECK(sum.re == rational(1));
  CHECK(sum.im == rational(0));
}

TEST_CASE("single weight reproduces the member run bit for bit") {
  const precision_context ctx(128);
  const big_real target = big_real::from_decimal("1e-15", ctx);
  const std::vector<weighted_term> ws{{4, {rational(7), rational(0)}}};
  const combination_report c = eval_combination(combination_spec(ws), target, ctx);
  const evaluation_report f = eval_family(family_params{0, 4}, target, ctx);
  CHECK(c.converged);
  CHECK(mpfr_equal_p(c.value_re.raw(), f.value.raw()) != 0);
  CHECK(c.value_im.is_zero());
  CHECK(mpfr_equal_p(c.remainder_bound.raw(), f.remainder_bound.raw()) != 0);
  CHECK(c.terms_used == f.terms_used);
}

TEST_CASE("scaling every weight changes nothing") {
  const precision_context ctx(128);
  const big_real target = big_real::from_decimal("1e-12", ctx);
  const std::vector<weighted_term> a{{2, {rational(1, 3), rational(0)}},
                                     {5, {rational(-5), rational(1)}}};
  const std::vector<weighted_term> b{{2, {rational(2, 3), rational(0)}},
                                     {5, {rational(-10), rational(2)}}};
  const combination_report ra = eval_combination(combination_spec(a), target, ctx);
  const combination_report rb = eval_combination(combination_spec(b), target, ctx);
  CHECK(mpfr_equal_p(ra.value_re.raw(), rb.value_re.raw()) != 0);
  CHECK(mpfr_equal_p(ra.value_im.raw(), rb.value_im.raw()) != 0);
  CHECK(mpfr_equal_p(ra.remainder_bound.raw(), rb.remainder_bound.raw()) != 0);
  CHECK(ra.terms_used == rb.terms_used);
}

TEST_CASE("conjugate weights cancel the imaginary part within the bound") {
  const precision_context ctx(128);
  const big_real target = big_real::from_decimal("1e-14", ctx);
  const std::vector<weighted_term> ws{{3, {rational(1), rational(5)}},
                                      {4, {rational(1), rational(-5)}}};
  const combination_report r = eval_combination(combination_spec(ws), target, ctx);
  CHECK(r.converged);
  const big_real invpi = big_real(1L, ctx) / big_real::pi(ctx);
  const big_real slack = abs(r.value_re) * big_real::pow2(-120, ctx);
  CHECK(abs(r.value_re - invpi) <=
        r.remainder_bound * big_real::from_decimal("1.01", ctx) + slack);
  CHECK(abs(r.value_im) <= r.remainder_bound + slack);
  CHECK(r.remainder_bound <=
        target * abs(r.value_re) * big_real::from_decimal("1.01", ctx));
}

TEST_CASE("zero weights contribute nothing") {
  const precision_context ctx(128);
  const big_real target = big_real::from_decimal("1e-10", ctx);
  const std::vector<weighted_term> with_zero{{3, {rational(2), rational(0)}},
                                             {4, {rational(0), rational(0)}}};
  const std::vector<weighted_term> without{{3, {rational(2), rational(0)}}};
  const combination_report rz = eval_combination(combination_spec(with_zero), target, ctx);
  const combination_report rw = eval_combination(combination_spec(without), target, ctx);
  CHECK(mpfr_equal_p(rz.value_re.raw(), rw.value_re.raw()) != 0);
  CHECK(rz.terms_used == rw.terms_used);
}
