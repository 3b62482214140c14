#include "romlab/integrate.hpp"

#include <stdexcept>
#include <vector>

#include "romlab/criterion.hpp"

namespace romlab {

namespace {

BigFloat point_to_float(const ExactPoint& p, unsigned prec, Round r) {
  if (p.is_rational()) return BigFloat::from_q(p.rational(), prec, r);
  return BigFloat::root_of(p.radical().radicand(), p.radical().index(), prec,
                           r);
}

}  // namespace

IntegralEnclosure integrate_fn_exact(const RationalY& y1, const RationalY& y2,
                                     std::uint64_t n_limit, unsigned k_min,
                                     unsigned precision_bits,
                                     std::uint64_t budget) {
  const BreakpointList bp = breakpoints(y1, y2, n_limit, k_min, budget);

  std::vector<ExactPoint> cuts;
  cuts.reserve(bp.points.size() + 2);
  cuts.emplace_back(y1);
  for (const RootOfInt& r : bp.points) cuts.emplace_back(r);
  cuts.emplace_back(y2);

  IntegralEnclosure out{BigFloat(precision_bits), BigFloat(precision_bits),
                        precision_bits, cuts.size() - 1};

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ExactPoint& a = cuts[i];
    const ExactPoint& b = cuts[i + 1];
    const mpq_class witness = rational_between(a, b);
    const FnProfile fn =
        fn_profile(RationalY(witness), n_limit, k_min, 0, FnMode::exact);

    // Outward-rounded piece width; f_N >= 0, so direction survives the
    // multiply.
    const BigFloat w_lo = point_to_float(b, precision_bits, Round::down)
                              .sub(point_to_float(a, precision_bits, Round::up),
                                   Round::down);
    const BigFloat w_hi = point_to_float(b, precision_bits, Round::up)
                              .sub(point_to_float(a, precision_bits, Round::down),
                                   Round::up);
    out.lo = out.lo.add(w_lo.mul_q(fn.value_exact, Round::down), Round::down);
    out.hi = out.hi.add(w_hi.mul_q(fn.value_exact, Round::up), Round::up);
  }
  return out;
}

BigFloat romanoff_bound(const RationalY& y1, const RationalY& y2,
                        std::uint64_t n_limit, unsigned precision_bits) {
  if (n_limit < 1) {
    throw std::invalid_argument("romanoff_bound requires N >= 1");
  }
  // 2 * Y2 * (pi^2/6) / ln(Y1) * ln(N); every step rounds so the result can
  // only overshoot the true value: numerator terms up, denominator down.
  const BigFloat pi = BigFloat::pi(precision_bits, Round::up);
  BigFloat num = pi.mul(pi, Round::up)
                     .div(BigFloat::from_ui(6, precision_bits, Round::down),
                          Round::up)
                     .mul(BigFloat::from_ui(2, precision_bits, Round::up),
                          Round::up)
                     .mul_q(y2.value(), Round::up);
  const BigFloat ln_y1 =
      BigFloat::from_q(y1.value(), precision_bits, Round::down)
          .log(Round::down);
  const BigFloat ln_n =
      BigFloat::from_ui(static_cast<unsigned long>(n_limit), precision_bits,
                        Round::up)
          .log(Round::up);
  return num.div(ln_y1, Round::up).mul(ln_n, Round::up);
}

BoundCheck verify_bound(const RationalY& y1, const RationalY& y2,
                        std::uint64_t n_limit, unsigned k_min,
                        unsigned precision_bits, std::uint64_t budget) {
  if (k_min != 1) {
    throw std::invalid_argument("verify_bound requires k_min = 1");
  }
  BoundCheck out{integrate_fn_exact(y1, y2, n_limit, k_min, precision_bits,
                                    budget),
                 romanoff_bound(y1, y2, n_limit, precision_bits), false};
  out.holds = out.integral.hi.cmp(out.bound) < 0;
  return out;
}

}  // namespace romlab
