#pragma once

#include <string_view>
#include <vector>

#include "piforge/rational.hpp"

namespace piforge {

// Three finite binomial-sum identities, all checked exactly over the
// rationals. The first targets a half-integer Pochhammer over a factorial;
// the other two normalize to 1 and are reparametrizations of one another
// (the third shifted by k -> k + m).
enum class identity_id { iv1, iv2, iv3 };

std::string_view identity_name(identity_id id);
// Inverse of identity_name; anything else throws domain_error.
identity_id identity_from_name(std::string_view name);

// Closed form the sum is claimed to equal.
rational identity_target(identity_id id, unsigned long m, unsigned long k);
// The finite sum itself. iv3 is only stated for k >= m; outside that range
// this throws domain_error rather than evaluating an unclaimed sum.
rational identity_lhs(identity_id id, unsigned long m, unsigned long k);

struct identity_report {
  identity_id id;
  unsigned long m = 0;
  unsigned long k = 0;
  rational lhs;
  bool holds = false;  // lhs equals the closed form exactly
};

identity_report verify_identity(identity_id id, unsigned long m, unsigned long k);

// Every (m, k) in [0, m_max] x [0, k_max] in m-major ascending order; iv3
// starts each row at k = m. Deterministic and single-threaded.
std::vector<identity_report> sweep_identity(identity_id id, unsigned long m_max,
                                            unsigned long k_max);

}  // namespace piforge
