#pragma once

#include <gmpxx.h>

#include <string>

#include "romlab/rational_y.hpp"

namespace romlab {

/// The real number m^(1/k) for an integer radicand m >= 2 and index k >= 1.
/// These are exactly the points where some floor power ⌊y^k⌋ jumps.
///
/// Construction canonicalizes: whenever m = t^q for a prime q dividing k the
/// pair is reduced to (t, k/q), so equal reals always have identical fields
/// (e.g. 4^(1/2) and 8^(1/3) both store as 2^(1/1)). Comparisons are exact
/// big-integer power comparisons, never floating point.
class RootOfInt {
 public:
  /// Requires m >= 2, k >= 1; throws std::invalid_argument otherwise.
  RootOfInt(mpz_class radicand, unsigned index);

  const mpz_class& radicand() const { return radicand_; }
  unsigned index() const { return index_; }

  /// True iff the canonical index is 1, i.e. the value is the integer m.
  bool is_integer() const { return index_ == 1; }

  /// "m^(1/k)", or "m" when k = 1.
  std::string str() const;

  /// Nearest-double approximation (diagnostics only; never used to decide).
  double approx() const;

  friend bool operator==(const RootOfInt& a, const RootOfInt& b) {
    return a.index_ == b.index_ && a.radicand_ == b.radicand_;
  }

 private:
  mpz_class radicand_;
  unsigned index_;
};

/// Exact three-way comparison of a = m1^(1/k1) and b = m2^(1/k2) via the
/// integer comparison m1^k2 vs m2^k1. Returns -1, 0, or +1.
int radical_cmp(const RootOfInt& a, const RootOfInt& b);

/// -1/0/+1 comparison of m^(1/k) against the rational q (q > 0).
int radical_cmp_rational(const RootOfInt& a, const mpq_class& q);

/// Deterministic exact rational strictly inside (lo, hi). The search walks a
/// dyadic ladder i/2^t (start scale seeded from a double estimate of the gap,
/// then refined); every candidate is verified by cross-multiplied integer
/// comparisons against both endpoints. Requires lo < hi.
RationalY rational_inside(const RootOfInt& lo, const RootOfInt& hi);

/// A piece endpoint for breakpoint partitions: either an exact rational or a
/// radical. Supports the same exact comparison and interior-point machinery.
class ExactPoint {
 public:
  /// q must be positive.
  explicit ExactPoint(mpq_class q);
  explicit ExactPoint(RootOfInt r) : rational_(0), radical_(std::move(r)), is_rational_(false) {}
  explicit ExactPoint(const RationalY& y) : ExactPoint(y.value()) {}

  bool is_rational() const { return is_rational_; }
  const mpq_class& rational() const { return rational_; }
  const RootOfInt& radical() const { return radical_; }

  /// floor(value * 2^t), computed exactly.
  mpz_class floor_scaled(unsigned t) const;

  /// -1/0/+1 against an exact rational.
  int cmp_rational(const mpq_class& q) const;

  double approx() const;
  std::string str() const;

 private:
  mpq_class rational_;
  RootOfInt radical_{mpz_class(2), 1};
  bool is_rational_;
};

/// Exact three-way comparison of two piece endpoints.
int exact_point_cmp(const ExactPoint& a, const ExactPoint& b);

/// Generalization of rational_inside to arbitrary exact endpoints.
mpq_class rational_between(const ExactPoint& lo, const ExactPoint& hi);

}  // namespace romlab
