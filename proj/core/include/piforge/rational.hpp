#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace piforge {

// Exact rational number, kept in canonical form: reduced, denominator > 0.
// All arithmetic is exact; division by zero throws domain_error.
class rational {
 public:
  rational() : q_(0) {}
  rational(long n) : q_(n) {}                    // NOLINT: implicit by design
  rational(unsigned long n) : q_(n) {}           // NOLINT
  rational(int n) : q_(n) {}                     // NOLINT
  rational(long num, long den);
  rational(const mpz_class& num, const mpz_class& den);
  explicit rational(const mpq_class& q);

  // Accepts "p", "p/q", optional leading sign on p or q.
  static rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }
  mpq_srcptr raw() const { return q_.get_mpq_t(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  // True for integers <= 0; the poles of gamma.
  bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

  rational& operator+=(const rational& o) { q_ += o.q_; return *this; }
  rational& operator-=(const rational& o) { q_ -= o.q_; return *this; }
  rational& operator*=(const rational& o) { q_ *= o.q_; return *this; }
  rational& operator/=(const rational& o);

  friend rational operator+(rational a, const rational& b) { return a += b; }
  friend rational operator-(rational a, const rational& b) { return a -= b; }
  friend rational operator*(rational a, const rational& b) { return a *= b; }
  friend rational operator/(rational a, const rational& b) { return a /= b; }
  friend rational operator-(const rational& a) { return rational(mpq_class(-a.q_)); }

  friend bool operator==(const rational& a, const rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const rational& a, const rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const rational& a, const rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const rational& a, const rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const rational& a, const rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const rational& a, const rational& b) { return a.q_ >= b.q_; }

  friend rational abs(const rational& a) { return rational(mpq_class(::abs(a.q_))); }

  // Integer power; e < 0 requires a nonzero base.
  rational pow_int(long e) const;

  double to_double() const { return q_.get_d(); }

  // Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const rational& r);

 private:
  mpq_class q_;
};

}  // namespace piforge
