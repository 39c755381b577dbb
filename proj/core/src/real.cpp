#include "piforge/real.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "piforge/errors.hpp"

namespace piforge {

precision_context::precision_context(unsigned precision_bits, unsigned guard_bits)
    : precision_bits_(precision_bits), guard_bits_(guard_bits) {
  if (precision_bits < 16)
    throw domain_error("precision_context: precision_bits must be >= 16");
}

namespace {

mpfr_prec_t result_prec(const big_real& a, const big_real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

big_real::big_real(mpfr_prec_t prec) { mpfr_init2(x_, prec); }

big_real::big_real(const precision_context& ctx) : big_real(mpfr_prec_t(ctx.working_bits())) {}

big_real::big_real(long v, const precision_context& ctx) : big_real(ctx) {
  mpfr_set_si(x_, v, MPFR_RNDN);
}

big_real::big_real(unsigned long v, const precision_context& ctx) : big_real(ctx) {
  mpfr_set_ui(x_, v, MPFR_RNDN);
}

big_real::big_real(const rational& q, const precision_context& ctx) : big_real(ctx) {
  mpfr_set_q(x_, q.raw(), MPFR_RNDN);
}

big_real::big_real(const big_real& o) : big_real(o.precision()) {
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

big_real::big_real(big_real&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

big_real& big_real::operator=(const big_real& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.precision());
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

big_real& big_real::operator=(big_real&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

big_real::~big_real() { mpfr_clear(x_); }

big_real big_real::from_decimal(std::string_view text, const precision_context& ctx) {
  big_real out(ctx);
  std::string s(text);
  if (s.empty() || mpfr_set_str(out.x_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw domain_error("big_real: cannot parse decimal '" + s + "'");
  return out;
}

big_real big_real::pi(const precision_context& ctx) {
  big_real out(ctx);
  mpfr_const_pi(out.x_, MPFR_RNDN);
  return out;
}

big_real big_real::sqrt_pi(const precision_context& ctx) {
  big_real out = pi(ctx);
  mpfr_sqrt(out.x_, out.x_, MPFR_RNDN);
  return out;
}

big_real big_real::pow2(long e, const precision_context& ctx) {
  big_real out(ctx);
  mpfr_set_ui_2exp(out.x_, 1, mpfr_exp_t(e), MPFR_RNDN);
  return out;
}

std::string big_real::str() const {
  int digits = static_cast<int>(std::ceil(double(precision()) * 0.30102999566398119)) + 2;
  return str(digits);
}

std::string big_real::str(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, x_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define PIFORGE_BINOP(opeq, op, fn)                                   \
  big_real& big_real::operator opeq(const big_real& o) {              \
    if (precision() < o.precision()) {                                \
      big_real tmp(result_prec(*this, o));                            \
      fn(tmp.x_, x_, o.x_, MPFR_RNDN);                                \
      *this = std::move(tmp);                                         \
    } else {                                                          \
      fn(x_, x_, o.x_, MPFR_RNDN);                                    \
    }                                                                 \
    return *this;                                                     \
  }                                                                   \
  big_real operator op(const big_real& a, const big_real& b) {        \
    big_real out(result_prec(a, b));                                  \
    fn(out.x_, a.x_, b.x_, MPFR_RNDN);                                \
    return out;                                                       \
  }

PIFORGE_BINOP(+=, +, mpfr_add)
PIFORGE_BINOP(-=, -, mpfr_sub)
PIFORGE_BINOP(*=, *, mpfr_mul)
#undef PIFORGE_BINOP

big_real& big_real::operator/=(const big_real& o) {
  if (o.is_zero()) throw domain_error("big_real: division by zero");
  if (precision() < o.precision()) {
    big_real tmp(result_prec(*this, o));
    mpfr_div(tmp.x_, x_, o.x_, MPFR_RNDN);
    *this = std::move(tmp);
  } else {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

big_real operator/(const big_real& a, const big_real& b) {
  if (b.is_zero()) throw domain_error("big_real: division by zero");
  big_real out(result_prec(a, b));
  mpfr_div(out.x_, a.x_, b.x_, MPFR_RNDN);
  return out;
}

big_real& big_real::operator*=(const rational& q) {
  mpfr_mul_q(x_, x_, q.raw(), MPFR_RNDN);
  return *this;
}

big_real& big_real::operator/=(const rational& q) {
  if (q.is_zero()) throw domain_error("big_real: division by zero");
  mpfr_div_q(x_, x_, q.raw(), MPFR_RNDN);
  return *this;
}

big_real& big_real::operator+=(const rational& q) {
  mpfr_add_q(x_, x_, q.raw(), MPFR_RNDN);
  return *this;
}

big_real operator-(const big_real& a) {
  big_real out(a.precision());
  mpfr_neg(out.x_, a.x_, MPFR_RNDN);
  return out;
}

big_real operator*(const big_real& a, const rational& q) {
  big_real out(a);
  out *= q;
  return out;
}

big_real operator*(const rational& q, const big_real& a) { return a * q; }

big_real operator/(const big_real& a, const rational& q) {
  big_real out(a);
  out /= q;
  return out;
}

bool operator==(const big_real& a, const big_real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
bool operator!=(const big_real& a, const big_real& b) { return !(a == b); }
bool operator<(const big_real& a, const big_real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
bool operator<=(const big_real& a, const big_real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
bool operator>(const big_real& a, const big_real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
bool operator>=(const big_real& a, const big_real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

big_real abs(const big_real& a) {
  big_real out(a.precision());
  mpfr_abs(out.x_, a.x_, MPFR_RNDN);
  return out;
}

big_real sqrt(const big_real& a) {
  if (a.sign() < 0) throw domain_error("big_real: sqrt of a negative value");
  big_real out(a.precision());
  mpfr_sqrt(out.x_, a.x_, MPFR_RNDN);
  return out;
}

big_real exp(const big_real& a) {
  big_real out(a.precision());
  mpfr_exp(out.x_, a.x_, MPFR_RNDN);
  return out;
}

big_real log(const big_real& a) {
  if (a.sign() <= 0) throw domain_error("big_real: log of a non-positive value");
  big_real out(a.precision());
  mpfr_log(out.x_, a.x_, MPFR_RNDN);
  return out;
}

big_real pow(const big_real& base, const big_real& e) {
  big_real out(result_prec(base, e));
  mpfr_pow(out.raw(), base.x_, e.x_, MPFR_RNDN);
  return out;
}

big_real pow(const big_real& base, long e) {
  big_real out(base.precision());
  mpfr_pow_si(out.raw(), base.x_, e, MPFR_RNDN);
  return out;
}

bool within_relative(const big_real& a, const big_real& b, const big_real& eps) {
  return abs(a - b) <= eps * abs(b);
}

}  // namespace piforge
