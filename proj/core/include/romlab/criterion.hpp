#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "romlab/prime_set.hpp"
#include "romlab/rational_y.hpp"

namespace romlab {

enum class FnMode { exact, floating };

/// The criterion function
///   f_N(y) = Σ_{d <= d_max} (1/d) * max_a #{k : ⌊y^k⌋ ≡ a (mod d)}
/// with k running over the floor-power sequence (k_min <= k, y^k <= N).
/// Bounding f_N by O(log N) is what drives the positive-density argument,
/// so rho = f_N / ln N is the quantity worth watching as N grows.
struct FnProfile {
  struct PerD {
    std::uint64_t d;
    std::uint64_t max_count;
    std::uint64_t argmax_residue;  // smallest residue attaining the max
  };

  RationalY y;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  std::uint64_t d_max = 0;
  FnMode mode = FnMode::exact;
  mpq_class value_exact;       // set in exact mode
  double value = 0.0;          // exact mode: rounded; float mode: compensated sum
  double rho = 0.0;            // value / ln N (0 when value is 0)
  std::optional<std::vector<PerD>> per_d;
};

/// Evaluates f_N. d_max = 0 selects the full range d <= N; d_max > N is an
/// error (the sum's range is d <= N). keep_per_d stores the per-d maxima for
/// diagnostics; exact mode accumulates over a common denominator and is
/// required by the regression suite at N <= 10^4.
FnProfile fn_profile(const RationalY& y, std::uint64_t n_limit, unsigned k_min,
                     std::uint64_t d_max, FnMode mode, bool keep_per_d = false);

/// The pair sum Σ_{k1 < k2} Π_{p | ⌊y^k2⌋ - ⌊y^k1⌋} (1 + 1/p) over pairs
/// with distinct floor values. Pairs with equal floors (possible for y near
/// 1) are excluded from the sum and counted separately.
struct PairSumResult {
  RationalY y;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  mpq_class value;
  std::uint64_t zero_diff_pairs = 0;
};

/// Requires primes adequate for factorize on every difference (< N).
PairSumResult pair_sum(const RationalY& y, std::uint64_t n_limit,
                       unsigned k_min, const PrimeSet& primes);

/// The inequality linking the pair sum to f_N: expanding each
/// Π(1+1/p) into Σ_{squarefree d | diff} 1/d and grouping pairs by residue
/// class gives  pair_sum <= (k_count / 2) * f_N,  where k_count is the
/// number of admitted exponents. Both sides are computed exactly.
struct RearrangementCheck {
  mpq_class eq1;    // the pair sum
  mpq_class bound;  // (k_count / 2) * f_N
  std::uint64_t k_count = 0;
  bool holds = false;
};

RearrangementCheck rearrangement_check(const RationalY& y,
                                       std::uint64_t n_limit, unsigned k_min,
                                       const PrimeSet& primes);

}  // namespace romlab
