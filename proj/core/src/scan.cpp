#include "romlab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "romlab/criterion.hpp"

namespace romlab {

namespace {

double nearest_rank(const std::vector<double>& sorted, double pct) {
  if (sorted.empty()) return 0.0;
  const double rank = pct / 100.0 * static_cast<double>(sorted.size());
  std::size_t idx = rank <= 1.0 ? 0
                                : static_cast<std::size_t>(std::ceil(rank)) - 1;
  if (idx >= sorted.size()) idx = sorted.size() - 1;
  return sorted[idx];
}

std::vector<mpq_class> build_grid(const RationalY& y1, const RationalY& y2,
                                  const GridSpec& spec) {
  if (!spec.explicit_points.empty()) {
    for (const mpq_class& q : spec.explicit_points) {
      if (q <= y1.value() || q >= y2.value()) {
        throw std::invalid_argument(
            "explicit grid point outside the open interval (Y1, Y2)");
      }
    }
    return spec.explicit_points;
  }
  std::vector<mpq_class> grid;
  grid.reserve(spec.count);
  const mpq_class width = y2.value() - y1.value();
  for (std::size_t i = 1; i <= spec.count; ++i) {
    if (spec.spacing == GridSpec::Spacing::uniform) {
      mpq_class y = y1.value() +
                    width * mpq_class(static_cast<unsigned long>(i),
                                      static_cast<unsigned long>(spec.count + 1));
      y.canonicalize();
      grid.push_back(y);
    } else {
      // Y1 * (Y2/Y1)^(i/(count+1)), rounded to a dyadic rational and clamped
      // strictly inside.
      const double frac = static_cast<double>(i) /
                          static_cast<double>(spec.count + 1);
      const double val = y1.value().get_d() *
                         std::pow(y2.value().get_d() / y1.value().get_d(), frac);
      const double den = 4294967296.0;  // 2^32
      mpq_class y(static_cast<long>(std::llround(val * den)), 4294967296L);
      y.canonicalize();
      if (y <= y1.value() || y >= y2.value()) continue;
      grid.push_back(y);
    }
  }
  return grid;
}

}  // namespace

ScanReport scan(const RationalY& y1, const RationalY& y2,
                std::uint64_t n_limit, unsigned k_min, const GridSpec& grid,
                double flag_percentile) {
  if (!(y1 < y2)) throw std::invalid_argument("scan requires Y1 < Y2");
  if (n_limit < 2) throw std::invalid_argument("scan requires N >= 2");

  ScanReport out{y1, y2, n_limit, k_min, {}, {}, flag_percentile, {}};
  const std::vector<mpq_class> ys = build_grid(y1, y2, grid);
  if (ys.empty()) return out;

  out.grid.reserve(ys.size());
  for (const mpq_class& q : ys) {
    const FnProfile fn =
        fn_profile(RationalY(q), n_limit, k_min, 0, FnMode::floating);
    out.grid.push_back({q, fn.value, fn.rho});
  }

  std::vector<double> rhos;
  rhos.reserve(out.grid.size());
  for (const ScanPoint& p : out.grid) rhos.push_back(p.rho);
  std::sort(rhos.begin(), rhos.end());
  out.quantiles = {rhos.front(),
                   nearest_rank(rhos, 25),
                   nearest_rank(rhos, 50),
                   nearest_rank(rhos, 75),
                   nearest_rank(rhos, 95),
                   rhos.back()};

  const double threshold = nearest_rank(rhos, flag_percentile);
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    if (out.grid[i].rho > threshold) out.flagged.push_back(i);
  }
  return out;
}

McEstimate mc_estimate(const RationalY& y1, const RationalY& y2,
                       std::uint64_t n_limit, unsigned k_min,
                       std::size_t n_samples, std::uint64_t seed) {
  if (!(y1 < y2)) throw std::invalid_argument("mc_estimate requires Y1 < Y2");
  if (n_samples < 2) {
    throw std::invalid_argument("mc_estimate requires n_samples >= 2");
  }

  std::mt19937_64 rng(seed);
  const mpq_class width = y2.value() - y1.value();
  const double width_d = width.get_d();

  double mean = 0.0, m2 = 0.0;
  std::size_t n = 0;
  const unsigned long two53 = 1ul << 53;
  for (std::size_t s = 0; s < n_samples; ++s) {
    std::uint64_t u = rng() >> 11;  // 53 uniform bits
    while (u == 0) u = rng() >> 11; // keep strictly inside the interval
    mpq_class y = y1.value() +
                  width * mpq_class(static_cast<unsigned long>(u), two53);
    y.canonicalize();
    const FnProfile fn =
        fn_profile(RationalY(y), n_limit, k_min, 0, FnMode::floating);
    // Welford, so the variance is single-pass and deterministic.
    ++n;
    const double delta = fn.value - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (fn.value - mean);
  }

  McEstimate out;
  out.n_samples = n_samples;
  out.seed = seed;
  out.estimate = width_d * mean;
  const double var = m2 / static_cast<double>(n - 1);
  out.stderr_ = width_d * std::sqrt(std::max(0.0, var) /
                                    static_cast<double>(n));
  return out;
}

}  // namespace romlab
