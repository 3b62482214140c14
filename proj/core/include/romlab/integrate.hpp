#pragma once

#include <cstdint>

#include "romlab/big_float.hpp"
#include "romlab/breakpoints.hpp"
#include "romlab/rational_y.hpp"

namespace romlab {

/// Rigorous two-sided bounds on ∫ f_N over (Y1, Y2): lo <= truth <= hi.
/// Produced by exact piecewise-constant integration with outward-rounded
/// piece widths at `precision_bits`.
struct IntegralEnclosure {
  BigFloat lo;
  BigFloat hi;
  unsigned precision_bits = 128;
  std::uint64_t piece_count = 0;

  double width() const { return hi.sub(lo, Round::up).to_double(); }
};

/// Partitions (Y1, Y2) at the breakpoints, evaluates f_N exactly at one
/// interior rational witness per piece (f_N is constant there), and sums
/// value * width with directed rounding. Breakpoints themselves have measure
/// zero and are never evaluated. Throws budget_error via breakpoints().
IntegralEnclosure integrate_fn_exact(const RationalY& y1, const RationalY& y2,
                                     std::uint64_t n_limit, unsigned k_min,
                                     unsigned precision_bits = 128,
                                     std::uint64_t budget = kDefaultPointBudget);

/// The closed-form majorant 2 * Y2 * (pi^2/6) / ln(Y1) * ln(N), rounded
/// upward throughout so the returned value never undershoots. Requires
/// Y1 > 1 (enforced by RationalY); N = 1 gives 0.
BigFloat romanoff_bound(const RationalY& y1, const RationalY& y2,
                        std::uint64_t n_limit, unsigned precision_bits = 128);

/// Eq.-style check: does the exact integral stay strictly below the
/// majorant? Requires k_min = 1 (the majorant's derivation sums k >= 1).
struct BoundCheck {
  IntegralEnclosure integral;
  BigFloat bound;
  bool holds = false;
};

BoundCheck verify_bound(const RationalY& y1, const RationalY& y2,
                        std::uint64_t n_limit, unsigned k_min,
                        unsigned precision_bits = 128,
                        std::uint64_t budget = kDefaultPointBudget);

}  // namespace romlab
