#pragma once

// stdio must precede mpfr.h so the mpfr_*printf formatters are declared.
#include <cstdio>

#include <mpfr.h>

#include <string>
#include <string_view>

#include "piforge/rational.hpp"

namespace piforge {

// Precision policy for floating point work. precision_bits is the accuracy
// callers reason about; guard_bits absorb accumulation drift. There is no
// global rounding state: every value carries its precision, and every MPFR
// operation rounds correctly (to nearest) at the destination precision.
class precision_context {
 public:
  explicit precision_context(unsigned precision_bits, unsigned guard_bits = 32);

  unsigned precision_bits() const { return precision_bits_; }
  unsigned guard_bits() const { return guard_bits_; }
  unsigned working_bits() const { return precision_bits_ + guard_bits_; }

 private:
  unsigned precision_bits_;
  unsigned guard_bits_;
};

// Arbitrary-precision real over mpfr_t. Value semantics; binary operations
// produce a result at the larger operand precision, correctly rounded.
class big_real {
 public:
  explicit big_real(const precision_context& ctx);  // NaN placeholder
  big_real(long v, const precision_context& ctx);
  big_real(unsigned long v, const precision_context& ctx);
  big_real(const rational& q, const precision_context& ctx);

  big_real(const big_real& o);
  big_real(big_real&& o) noexcept;
  big_real& operator=(const big_real& o);
  big_real& operator=(big_real&& o) noexcept;
  ~big_real();

  // Parses a base-10 significand with optional exponent ("1e-30", "0.25").
  static big_real from_decimal(std::string_view text, const precision_context& ctx);
  static big_real pi(const precision_context& ctx);
  static big_real sqrt_pi(const precision_context& ctx);
  // Exact power of two (also for e < 0); handy for bounds.
  static big_real pow2(long e, const precision_context& ctx);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  int sign() const { return mpfr_sgn(x_); }
  bool is_nan() const { return mpfr_nan_p(x_) != 0; }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_integer() const { return mpfr_integer_p(x_) != 0; }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  // Decimal scientific form carrying the full working precision; parses back
  // to the same value, and equal values print identically.
  std::string str() const;
  std::string str(int significant_digits) const;

  big_real& operator+=(const big_real& o);
  big_real& operator-=(const big_real& o);
  big_real& operator*=(const big_real& o);
  big_real& operator/=(const big_real& o);
  big_real& operator*=(const rational& q);
  big_real& operator/=(const rational& q);
  big_real& operator+=(const rational& q);

  friend big_real operator+(const big_real& a, const big_real& b);
  friend big_real operator-(const big_real& a, const big_real& b);
  friend big_real operator*(const big_real& a, const big_real& b);
  friend big_real operator/(const big_real& a, const big_real& b);
  friend big_real operator-(const big_real& a);
  friend big_real operator*(const big_real& a, const rational& q);
  friend big_real operator*(const rational& q, const big_real& a);
  friend big_real operator/(const big_real& a, const rational& q);

  friend bool operator==(const big_real& a, const big_real& b);
  friend bool operator!=(const big_real& a, const big_real& b);
  friend bool operator<(const big_real& a, const big_real& b);
  friend bool operator<=(const big_real& a, const big_real& b);
  friend bool operator>(const big_real& a, const big_real& b);
  friend bool operator>=(const big_real& a, const big_real& b);

  friend big_real abs(const big_real& a);
  friend big_real sqrt(const big_real& a);  // a >= 0 required
  friend big_real exp(const big_real& a);
  friend big_real log(const big_real& a);   // a > 0 required
  friend big_real pow(const big_real& base, const big_real& e);
  friend big_real pow(const big_real& base, long e);

  // |a - b| <= eps * |b|
  friend bool within_relative(const big_real& a, const big_real& b, const big_real& eps);

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  explicit big_real(mpfr_prec_t prec);
  mpfr_t x_;
};

}  // namespace piforge
