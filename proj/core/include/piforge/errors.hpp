#pragma once

#include <stdexcept>

namespace piforge {

// Base class for every failure the library reports deliberately.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma requested at a non-positive integer.
struct pole_error : error {
  using error::error;
};

// A Pochhammer denominator of the ascending Bessel series vanishes,
// i.e. 2*nu+1 is a non-positive integer reached by the stream.
struct degenerate_order_error : error {
  using error::error;
};

// Order outside the admissible set of the operation: nu in
// {-1/2, -1, -3/2, ...}, or a half-integer order was required.
struct invalid_order_error : error {
  using error::error;
};

// Parameter outside an operation's domain (k < 2, z <= 0, k < m, ...).
struct domain_error : error {
  using error::error;
};

// Requested tolerance is unreachable at the context precision, or the
// term budget ran out before the certified stopping rule fired.
struct precision_exhausted_error : error {
  using error::error;
};

// Magnitudes failed to decrease inside the alternating regime.
// Indicates an internal defect; never expected on valid input.
struct non_decreasing_terms_error : error {
  using error::error;
};

// Combination weights sum to zero and cannot be normalized.
struct zero_normalization_error : error {
  using error::error;
};

}  // namespace piforge
