#include "piforge/rational.hpp"

#include <ostream>

#include "piforge/errors.hpp"

namespace piforge {

rational::rational(long num, long den) {
  if (den == 0) throw domain_error("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

rational::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw domain_error("rational: zero denominator");
  q_ = mpq_class(num) / mpq_class(den);
}

rational::rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw domain_error("rational: zero denominator");
  q_.canonicalize();
}

rational rational::parse(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw domain_error("rational: cannot parse '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw domain_error("rational: zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return rational(q);
}

rational& rational::operator/=(const rational& o) {
  if (o.is_zero()) throw domain_error("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

rational rational::pow_int(long e) const {
  if (e == 0) return rational(1);
  if (is_zero() && e < 0) throw domain_error("rational: 0 to a negative power");
  mpq_class base = e > 0 ? q_ : mpq_class(1) / q_;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1;
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), n);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), n);
  // base was canonical, so the power is canonical as well
  return rational(out);
}

std::string rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const rational& r) {
  return os << r.str();
}

}  // namespace piforge
