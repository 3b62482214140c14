#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "romlab/rational_y.hpp"

namespace romlab {

/// ⌊y^k⌋ by exact integer division of num^k by den^k.
mpz_class floor_pow(const RationalY& y, unsigned k);

/// The sequence ⌊y^k⌋ for k_min <= k <= K, where K is the largest k with
/// y^K <= n_limit (exact comparison, inclusive at equality). Empty when even
/// k = k_min overshoots. Values are bounded by n_limit and non-decreasing.
struct PowerFloorSeq {
  RationalY y;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  std::vector<std::uint64_t> floors;  // indexed k_min .. k_max()

  bool empty() const { return floors.empty(); }
  std::size_t count() const { return floors.size(); }
  /// Largest admitted exponent; k_min - 1 when the sequence is empty.
  long k_max() const {
    return static_cast<long>(k_min) + static_cast<long>(floors.size()) - 1;
  }
};

/// Builds the floor-power sequence. Throws budget_error when the number of
/// exponents would exceed max_terms (y barely above 1 makes K ~ log N/log y
/// arbitrarily large).
PowerFloorSeq floor_pow_seq(const RationalY& y, std::uint64_t n_limit,
                            unsigned k_min,
                            std::size_t max_terms = 1u << 20);

}  // namespace romlab
