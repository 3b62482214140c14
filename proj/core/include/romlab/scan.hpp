#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "romlab/rational_y.hpp"

namespace romlab {

/// Grid specification for scan(): either an explicit list of rationals or a
/// generated interior grid of `count` points, uniformly or log spaced.
/// Log-spaced points are dyadic-rational approximations (true log spacing is
/// irrational); uniform points are exact.
struct GridSpec {
  enum class Spacing { uniform, log };
  std::vector<mpq_class> explicit_points;  // wins when non-empty
  std::size_t count = 0;
  Spacing spacing = Spacing::uniform;
};

struct ScanPoint {
  mpq_class y;
  double fn_value = 0.0;
  double rho = 0.0;  // fn_value / ln N
};

struct RhoQuantiles {
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double q95 = 0.0;
  double max = 0.0;
};

/// f_N / rho profile over a y-grid, with nearest-rank quantiles of rho and
/// the indices of grid points whose rho sits above the flag percentile.
struct ScanReport {
  RationalY y1;
  RationalY y2;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  std::vector<ScanPoint> grid;
  RhoQuantiles quantiles;
  double flag_percentile = 95.0;
  std::vector<std::size_t> flagged;
};

/// Evaluates f_N (float mode) at every grid point inside (Y1, Y2). An empty
/// grid yields an empty report. Requires N >= 2 so rho stays finite.
ScanReport scan(const RationalY& y1, const RationalY& y2,
                std::uint64_t n_limit, unsigned k_min, const GridSpec& grid,
                double flag_percentile = 95.0);

/// Seeded Monte Carlo estimate of ∫ f_N over (Y1, Y2): uniform dyadic
/// rationals (53-bit numerators over a fixed 2^53 denominator ladder),
/// estimate = (Y2-Y1) * mean(f_N), stderr from the sample variance.
/// Bit-identical results for identical seeds.
struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

McEstimate mc_estimate(const RationalY& y1, const RationalY& y2,
                       std::uint64_t n_limit, unsigned k_min,
                       std::size_t n_samples, std::uint64_t seed);

}  // namespace romlab
