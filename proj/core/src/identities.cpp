#include "piforge/identities.hpp"

#include "piforge/errors.hpp"
#include "piforge/factorials.hpp"

namespace piforge {

std::string_view identity_name(identity_id id) {
  switch (id) {
    case identity_id::iv1: return "iv1";
    case identity_id::iv2: return "iv2";
    case identity_id::iv3: return "iv3";
  }
  return "?";
}

identity_id identity_from_name(std::string_view name) {
  if (name == "iv1") return identity_id::iv1;
  if (name == "iv2") return identity_id::iv2;
  if (name == "iv3") return identity_id::iv3;
  throw domain_error("unknown identity id; expected iv1, iv2, or iv3");
}

rational identity_target(identity_id id, unsigned long m, unsigned long k) {
  switch (id) {
    case identity_id::iv1:
      return rising_factorial(rational(1, 2), m + 1) /
             rational(factorial(m + k), mpz_class(1));
    case identity_id::iv2:
    case identity_id::iv3:
      return rational(1);
  }
  throw domain_error("identity_target: unknown identity");
}

rational identity_lhs(identity_id id, unsigned long m, unsigned long k) {
  rational s;
  switch (id) {
    case identity_id::iv1: {
      const rational mp1(static_cast<long>(m) + 1);
      for (unsigned long n = 0; n <= m; ++n) {
        rational t = rising_factorial(mp1, n) *
                     falling_factorial(rational(static_cast<long>(m)), n) *
                     rising_factorial(mp1, k + n) *
                     rational(static_cast<long>(k + m + 2 * n + 1));
        t /= rational(factorial(n) * factorial(k + n), mpz_class(1));
        t /= rising_factorial(rational(2 * static_cast<long>(m) + 2), k + n);
        s += t;
      }
      return s * rational(2).pow_int(-(2 * static_cast<long>(m) + 1));
    }
    case identity_id::iv2: {
      for (unsigned long n = 0; n <= m; ++n) {
        rational t = binomial(m, n) * binomial(m + n + k, m) /
                     binomial(2 * m + n + k, n + m);
        t *= rational(static_cast<long>(m + 2 * n + k + 1),
                      static_cast<long>(2 * m + n + k + 1));
        s += t;
      }
      return s;
    }
    case identity_id::iv3: {
      if (k < m)
        throw domain_error("identity_lhs: iv3 is stated for k >= m only");
      for (unsigned long n = 0; n <= m; ++n) {
        rational t = binomial(m, n) * binomial(n + k, m) /
                     binomial(m + n + k, n + m);
        t *= rational(static_cast<long>(2 * n + k + 1),
                      static_cast<long>(n + m + k + 1));
        s += t;
      }
      return s;
    }
  }
  throw domain_error("identity_lhs: unknown identity");
}

identity_report verify_identity(identity_id id, unsigned long m, unsigned long k) {
  rational lhs = identity_lhs(id, m, k);
  const bool holds = lhs == identity_target(id, m, k);
  return identity_report{id, m, k, std::move(lhs), holds};
}

std::vector<identity_report> sweep_identity(identity_id id, unsigned long m_max,
                                            unsigned long k_max) {
  std::vector<identity_report> out;
  out.reserve((m_max + 1) * (k_max + 1));
  for (unsigned long m = 0; m <= m_max; ++m)
    for (unsigned long k = (id == identity_id::iv3 ? m : 0); k <= k_max; ++k)
      out.push_back(verify_identity(id, m, k));
  return out;
}

}  // namespace piforge
