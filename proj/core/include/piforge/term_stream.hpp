#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "piforge/rational.hpp"

namespace piforge {

// Lazily generated series terms: an exact first term plus an exact ratio
// rule term(n+1)/term(n). Advancing applies the rule, so the incremental
// term equals the closed-form term exactly; signs ride along with the value.
class rational_term_stream {
 public:
  using ratio_fn = std::function<rational(std::uint64_t)>;

  rational_term_stream(rational first, ratio_fn ratio)
      : term_(std::move(first)), ratio_(std::move(ratio)) {}

  std::uint64_t index() const { return n_; }
  const rational& term() const { return term_; }
  int sign() const { return term_.sign(); }

  void advance() {
    term_ *= ratio_(n_);
    ++n_;
  }

  // Term at a given index, consuming the stream up to it.
  const rational& advance_to(std::uint64_t n) {
    while (n_ < n) advance();
    return term_;
  }

 private:
  std::uint64_t n_ = 0;
  rational term_;
  ratio_fn ratio_;
};

}  // namespace piforge
