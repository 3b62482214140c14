#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace romlab {

/// The exact rational parameter y > 1 whose floor powers ⌊y^k⌋ drive every
/// computation in this library. Stored canonically (lowest terms, positive
/// denominator); immutable after construction.
class RationalY {
 public:
  /// Requires value > 1; throws std::invalid_argument otherwise.
  explicit RationalY(mpq_class value);
  RationalY(long num, long den) : RationalY(mpq_class(num, den)) {}

  const mpq_class& value() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  /// "num/den" (or just "num" when the denominator is 1).
  std::string str() const;

  friend bool operator==(const RationalY& a, const RationalY& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const RationalY& a, const RationalY& b) {
    return a.value_ < b.value_;
  }

 private:
  mpq_class value_;
};

/// Parses "p/q", an integer "d", or a finite decimal "d.ddd" into an exact
/// rational in lowest terms. Rejects malformed text and any value <= 1
/// (the parameter domain is y > 1) with std::invalid_argument.
RationalY parse_y(std::string_view text);

}  // namespace romlab
