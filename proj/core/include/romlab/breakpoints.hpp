#pragma once

#include <cstdint>
#include <vector>

#include "romlab/rational_y.hpp"
#include "romlab/root_of_int.hpp"

namespace romlab {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// All points of (Y1, Y2) where the data feeding f_N can change: sorted,
/// deduplicated radicals m^(1/k) with k in [max(1, k_min), K_max(Y1)],
/// m an integer strictly inside (Y1^k, Y2^k), and m <= N. Crossings with
/// m > N happen where exponent k is already out of range (y^k > N), so they
/// never move f_N; m = N marks where K(y, N) itself drops. Between two
/// consecutive listed points every in-range ⌊y^k⌋ and K(y, N) are constant.
struct BreakpointList {
  RationalY y1;
  RationalY y2;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  std::vector<RootOfInt> points;
};

/// Enumerates the list. The candidate count (~ Σ_k min(N, Y2^k) - Y1^k) is
/// estimated up front; exceeding `budget` raises budget_error with a hint
/// to fall back to mc_estimate. Requires 1 < Y1 < Y2.
BreakpointList breakpoints(const RationalY& y1, const RationalY& y2,
                           std::uint64_t n_limit, unsigned k_min,
                           std::uint64_t budget = kDefaultPointBudget);

}  // namespace romlab
