#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "romlab/criterion.hpp"
#include "romlab/errors.hpp"
#include "romlab/integrate.hpp"
#include "romlab/power_floor.hpp"
#include "romlab/scan.hpp"

using namespace romlab;

namespace {

// Canonicalized, sorted, deduplicated oracle breakpoint list.
std::vector<RootOfInt> oracle_points(const RationalY& y1, const RationalY& y2,
                                     std::uint64_t n, unsigned k_min) {
  std::vector<RootOfInt> pts;
  for (const auto& [m, k] : oracle::breakpoints(y1.value(), y2.value(), n, k_min)) {
    pts.emplace_back(mpz_class(static_cast<unsigned long>(m)), k);
  }
  std::sort(pts.begin(), pts.end(), [](const RootOfInt& a, const RootOfInt& b) {
    return radical_cmp(a, b) < 0;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

TEST_CASE("breakpoints on (2,3,N=4): no in-range crossing survives") {
  // k=1 has no interior integer; k=2 crossings all have m > N, where the
  // exponent is already out of range, so the interval is one constant piece.
  const BreakpointList bp = breakpoints(parse_y("2"), parse_y("3"), 4, 1);
  CHECK(bp.points.empty());
  CHECK(bp.points == oracle_points(parse_y("2"), parse_y("3"), 4, 1));
}

TEST_CASE("breakpoints on (3/2,3,N=4): dedup via canonical forms") {
  const BreakpointList bp = breakpoints(parse_y("3/2"), parse_y("3"), 4, 1);
  // 2^(1/1) (from k=1 m=2, k=2 m=4), 3^(1/2), 2^(1/3), 3^(1/3), 4^(1/3).
  CHECK(bp.points == oracle_points(parse_y("3/2"), parse_y("3"), 4, 1));
  CHECK(std::count(bp.points.begin(), bp.points.end(), RootOfInt(2, 1)) == 1);
  for (std::size_t i = 1; i < bp.points.size(); ++i) {
    CHECK(radical_cmp(bp.points[i - 1], bp.points[i]) == -1);  // strict sort
  }
  // All points strictly inside the interval.
  for (const RootOfInt& r : bp.points) {
    CHECK(radical_cmp_rational(r, mpq_class(3, 2)) == 1);
    CHECK(radical_cmp_rational(r, mpq_class(3)) == -1);
  }
}

TEST_CASE("breakpoints match the enumeration oracle on random intervals") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const unsigned long d1 = 1 + rng() % 8;
    const unsigned long n1 = d1 + 1 + rng() % (3 * d1);
    const RationalY y1{mpq_class(n1, d1)};
    const RationalY y2{y1.value() + mpq_class(1 + rng() % 30, 10)};
    const std::uint64_t n = 2 + rng() % 60;
    INFO("interval (", y1.str(), ", ", y2.str(), ") N=", n);
    const BreakpointList bp = breakpoints(y1, y2, n, 1);
    CHECK(bp.points == oracle_points(y1, y2, n, 1));
  }
}

TEST_CASE("breakpoints honors k_min") {
  // With k_min = 2 the k = 1 crossing of 2 disappears, but the same real
  // reappears through k = 2 (m = 4).
  const BreakpointList bp = breakpoints(parse_y("3/2"), parse_y("3"), 4, 2);
  CHECK(bp.points == oracle_points(parse_y("3/2"), parse_y("3"), 4, 2));
  CHECK(std::count(bp.points.begin(), bp.points.end(), RootOfInt(2, 1)) == 1);
  // k_min = 0 never adds points (y^0 = 1 is constant).
  const BreakpointList b0 = breakpoints(parse_y("3/2"), parse_y("3"), 4, 0);
  const BreakpointList b1 = breakpoints(parse_y("3/2"), parse_y("3"), 4, 1);
  CHECK(b0.points == b1.points);
}

TEST_CASE("breakpoints rejects bad intervals and oversized enumerations") {
  CHECK_THROWS_AS(breakpoints(parse_y("2"), parse_y("2"), 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(breakpoints(parse_y("3"), parse_y("2"), 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(breakpoints(parse_y("6/5"), parse_y("3"), 1000000, 1, 100),
                  budget_error);
}

TEST_CASE("integrate on (2,3,N=4): tight enclosure of 25/12") {
  const IntegralEnclosure enc = integrate_fn_exact(parse_y("2"), parse_y("3"), 4, 1);
  const double lo = enc.lo.to_double();
  const double hi = enc.hi.to_double();
  const double want = 25.0 / 12.0;
  CHECK(lo <= want);
  CHECK(want <= hi);
  CHECK(enc.width() < 1e-9);
  CHECK(enc.piece_count == 1);
}

TEST_CASE("integrate over a region with no floor powers is [0,0]") {
  const IntegralEnclosure enc =
      integrate_fn_exact(parse_y("200"), parse_y("300"), 50, 1);
  CHECK(enc.lo.is_zero());
  CHECK(enc.hi.is_zero());
}

TEST_CASE("integrate enclosures nest as precision grows") {
  const RationalY y1 = parse_y("3/2"), y2 = parse_y("3");
  const IntegralEnclosure coarse = integrate_fn_exact(y1, y2, 30, 1, 64);
  const IntegralEnclosure fine = integrate_fn_exact(y1, y2, 30, 1, 192);
  CHECK(fine.lo.cmp(coarse.lo) >= 0);
  CHECK(fine.hi.cmp(coarse.hi) <= 0);
  CHECK(fine.width() <= coarse.width());
  // Midpoint Riemann check: a fine rational grid avoiding breakpoints stays
  // inside the coarse enclosure once scaled by the width.
  mpq_class width = y2.value() - y1.value();
  mpq_class riemann(0);
  const int cells = 64;
  for (int i = 0; i < cells; ++i) {
    mpq_class yv = y1.value() + width * mpq_class(2 * i + 1, 2 * cells);
    yv.canonicalize();
    riemann += fn_profile(RationalY(yv), 30, 1, 0, FnMode::exact).value_exact;
  }
  riemann *= width;
  riemann /= cells;
  // Grid points can land on breakpoints only with probability zero; with
  // this fixed grid none do, so the sum must sit inside a slightly padded
  // enclosure (pieces are constant, padding only covers cell misalignment).
  const double rd = riemann.get_d();
  CHECK(rd > coarse.lo.to_double() - 0.5);
  CHECK(rd < coarse.hi.to_double() + 0.5);
}

TEST_CASE("integrate is additive across a rational midpoint") {
  const RationalY y1 = parse_y("7/5"), ym = parse_y("2"), y2 = parse_y("13/5");
  const std::uint64_t n = 40;
  const IntegralEnclosure left = integrate_fn_exact(y1, ym, n, 1);
  const IntegralEnclosure right = integrate_fn_exact(ym, y2, n, 1);
  const IntegralEnclosure whole = integrate_fn_exact(y1, y2, n, 1);
  const double sum_lo = left.lo.to_double() + right.lo.to_double();
  const double sum_hi = left.hi.to_double() + right.hi.to_double();
  CHECK(sum_lo <= whole.hi.to_double() + 1e-15);
  CHECK(sum_hi >= whole.lo.to_double() - 1e-15);
  CHECK(std::fabs(sum_lo - whole.lo.to_double()) < 1e-12);
}

TEST_CASE("romanoff_bound closed forms") {
  // (2,3,4): 2*3*(pi^2/6)/ln2 * ln4 = 2*pi^2.
  const BigFloat b = romanoff_bound(parse_y("2"), parse_y("3"), 4);
  const double want = 2 * M_PI * M_PI;
  CHECK(std::fabs(b.to_double() - want) < 1e-12);
  CHECK(b.to_double() >= want);  // upper rounding never undershoots

  CHECK(romanoff_bound(parse_y("2"), parse_y("3"), 1).to_double() == 0.0);

  // Y1 -> 1+ diverges but stays finite for any fixed Y1 > 1.
  const double big =
      romanoff_bound(parse_y("1001/1000"), parse_y("3"), 4).to_double();
  CHECK(std::isfinite(big));
  CHECK(big > 1e3);
}

TEST_CASE("verify_bound accepts the desk-scale grid rows") {
  const BoundCheck a = verify_bound(parse_y("2"), parse_y("3"), 4, 1);
  CHECK(a.holds);
  CHECK(a.bound.to_double() == doctest::Approx(19.7392088).epsilon(1e-6));
  CHECK(a.integral.hi.to_double() < 2.084);
  CHECK(a.integral.lo.to_double() > 2.083);

  const BoundCheck b = verify_bound(parse_y("3/2"), parse_y("3"), 50, 1);
  CHECK(b.holds);
  CHECK(b.bound.to_double() == doctest::Approx(95.23).epsilon(1e-2));

  CHECK_THROWS_AS(verify_bound(parse_y("2"), parse_y("3"), 4, 0),
                  std::invalid_argument);
}

TEST_CASE("scan over a constant piece yields identical rho values") {
  GridSpec spec;
  spec.count = 5;
  const ScanReport r = scan(parse_y("2"), parse_y("3"), 4, 1, spec);
  REQUIRE(r.grid.size() == 5);
  const double want_rho = (25.0 / 12.0) / std::log(4.0);
  for (const ScanPoint& p : r.grid) {
    CHECK(p.rho == doctest::Approx(want_rho).epsilon(1e-12));
  }
  CHECK(r.quantiles.min == r.quantiles.max);
  CHECK(r.flagged.empty());  // nothing sits above a constant quantile
}

TEST_CASE("scan with an empty grid returns an empty report") {
  GridSpec spec;
  spec.count = 0;
  const ScanReport r = scan(parse_y("2"), parse_y("3"), 4, 1, spec);
  CHECK(r.grid.empty());
  CHECK(r.flagged.empty());
}

TEST_CASE("scan sees the jump across the breakpoint at 2 in (3/2,3)") {
  GridSpec spec;
  spec.explicit_points = {mpq_class(19, 10), mpq_class(21, 10)};
  const ScanReport r = scan(parse_y("3/2"), parse_y("3"), 4, 1, spec);
  REQUIRE(r.grid.size() == 2);
  CHECK(r.grid[0].fn_value == doctest::Approx(43.0 / 12.0).epsilon(1e-12));
  CHECK(r.grid[1].fn_value == doctest::Approx(25.0 / 12.0).epsilon(1e-12));
  CHECK(r.grid[0].fn_value != r.grid[1].fn_value);
}

TEST_CASE("scan flags exactly the points above the percentile threshold") {
  GridSpec spec;
  spec.count = 40;
  const ScanReport r = scan(parse_y("3/2"), parse_y("3"), 50, 1, spec, 75.0);
  REQUIRE(r.grid.size() == 40);
  CHECK(r.quantiles.min < r.quantiles.max);  // f_N really varies here
  CHECK_FALSE(r.flagged.empty());
  std::vector<double> rhos;
  for (const ScanPoint& p : r.grid) rhos.push_back(p.rho);
  std::sort(rhos.begin(), rhos.end());
  const double threshold = rhos[29];  // nearest-rank 75% of 40
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const bool flagged =
        std::find(r.flagged.begin(), r.flagged.end(), i) != r.flagged.end();
    CHECK(flagged == (r.grid[i].rho > threshold));
  }
}

TEST_CASE("scan log-spaced grids stay strictly inside the interval") {
  GridSpec spec;
  spec.count = 12;
  spec.spacing = GridSpec::Spacing::log;
  const ScanReport r = scan(parse_y("3/2"), parse_y("4"), 30, 1, spec);
  CHECK(!r.grid.empty());
  CHECK(r.grid.size() <= 12);  // boundary-rounded points are dropped
  for (const ScanPoint& p : r.grid) {
    CHECK(p.y > mpq_class(3, 2));
    CHECK(p.y < 4);
  }
}

TEST_CASE("scan validates its inputs") {
  GridSpec spec;
  spec.count = 3;
  CHECK_THROWS_AS(scan(parse_y("3"), parse_y("2"), 10, 1, spec),
                  std::invalid_argument);
  CHECK_THROWS_AS(scan(parse_y("2"), parse_y("3"), 1, 1, spec),
                  std::invalid_argument);
  GridSpec bad;
  bad.explicit_points = {mpq_class(5)};  // outside (2,3)
  CHECK_THROWS_AS(scan(parse_y("2"), parse_y("3"), 10, 1, bad),
                  std::invalid_argument);
}

TEST_CASE("piecewise constancy: witnesses inside one piece agree exactly") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 25) {
    const unsigned long d1 = 1 + rng() % 6;
    const unsigned long n1 = d1 + 1 + rng() % (2 * d1);
    const RationalY y1{mpq_class(n1, d1)};
    const RationalY y2{y1.value() + mpq_class(1 + rng() % 20, 7)};
    const std::uint64_t n = 2 + rng() % 80;
    const BreakpointList bp = breakpoints(y1, y2, n, 1);
    if (bp.points.empty()) continue;
    const std::size_t cut = rng() % bp.points.size();
    const ExactPoint lo = cut == 0 ? ExactPoint(y1) : ExactPoint(bp.points[cut - 1]);
    const ExactPoint hi = ExactPoint(bp.points[cut]);
    const mpq_class w1 = rational_between(lo, hi);
    const mpq_class w2 = rational_between(ExactPoint(w1), hi);
    REQUIRE(w1 != w2);
    const mpq_class f1 = fn_profile(RationalY(w1), n, 1, 0, FnMode::exact).value_exact;
    const mpq_class f2 = fn_profile(RationalY(w2), n, 1, 0, FnMode::exact).value_exact;
    CHECK(f1 == f2);

    // Across the cut the floor vector must change.
    const ExactPoint hi2 = cut + 1 < bp.points.size()
                               ? ExactPoint(bp.points[cut + 1])
                               : ExactPoint(y2);
    const mpq_class w3 = rational_between(ExactPoint(bp.points[cut]), hi2);
    CHECK(floor_pow_seq(RationalY(w1), n, 1).floors !=
          floor_pow_seq(RationalY(w3), n, 1).floors);
    ++checked;
  }
}

TEST_CASE("mc_estimate is deterministic and consistent with the enclosure") {
  const McEstimate a = mc_estimate(parse_y("2"), parse_y("3"), 4, 1, 5000, 42);
  const McEstimate b = mc_estimate(parse_y("2"), parse_y("3"), 4, 1, 5000, 42);
  CHECK(a.estimate == b.estimate);  // bitwise
  CHECK(a.stderr_ == b.stderr_);
  // Constant piece: zero variance, estimate equals f up to float evaluation.
  CHECK(a.stderr_ == 0.0);
  CHECK(a.estimate == doctest::Approx(25.0 / 12.0).epsilon(1e-12));

  const McEstimate c = mc_estimate(parse_y("3/2"), parse_y("3"), 20, 1, 4000, 7);
  const IntegralEnclosure enc =
      integrate_fn_exact(parse_y("3/2"), parse_y("3"), 20, 1);
  const double mid = (enc.lo.to_double() + enc.hi.to_double()) / 2;
  CHECK(std::fabs(c.estimate - mid) <= 3 * c.stderr_ + 1e-9);

  const McEstimate zero = mc_estimate(parse_y("200"), parse_y("300"), 50, 1, 100, 1);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.stderr_ == 0.0);

  CHECK_THROWS_AS(mc_estimate(parse_y("2"), parse_y("3"), 4, 1, 1, 0),
                  std::invalid_argument);
}
