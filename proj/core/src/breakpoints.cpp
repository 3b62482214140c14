#include "romlab/breakpoints.hpp"

#include <algorithm>
#include <stdexcept>

#include "romlab/errors.hpp"
#include "romlab/power_floor.hpp"

namespace romlab {

namespace {

// Largest integer strictly below num/den: floor for non-integers, value-1 at
// integers.
mpz_class strict_floor(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r == 0) q -= 1;
  return q;
}

}  // namespace

BreakpointList breakpoints(const RationalY& y1, const RationalY& y2,
                           std::uint64_t n_limit, unsigned k_min,
                           std::uint64_t budget) {
  if (!(y1 < y2)) {
    throw std::invalid_argument("breakpoints requires Y1 < Y2");
  }
  if (n_limit < 1) throw std::invalid_argument("breakpoints requires N >= 1");

  // K_max from Y1: the largest k active anywhere in the interval.
  const PowerFloorSeq base = floor_pow_seq(y1, n_limit, std::max(1u, k_min));
  const long k_max = base.k_max();

  BreakpointList out{y1, y2, n_limit, k_min, {}};
  if (k_max < static_cast<long>(std::max(1u, k_min))) return out;

  const mpz_class n(static_cast<unsigned long>(n_limit));

  // Per-k half-open integer ranges (lo_k, hi_k]: first a cheap total count
  // against the budget, then the actual enumeration.
  struct Range {
    unsigned k;
    mpz_class first;  // smallest admissible m
    mpz_class last;   // largest admissible m
  };
  std::vector<Range> ranges;
  mpz_class total(0);
  mpz_class num1_k, den1_k, num2_k, den2_k;
  for (unsigned k = std::max(1u, k_min); k <= static_cast<unsigned>(k_max);
       ++k) {
    mpz_pow_ui(num1_k.get_mpz_t(), y1.num().get_mpz_t(), k);
    mpz_pow_ui(den1_k.get_mpz_t(), y1.den().get_mpz_t(), k);
    mpz_pow_ui(num2_k.get_mpz_t(), y2.num().get_mpz_t(), k);
    mpz_pow_ui(den2_k.get_mpz_t(), y2.den().get_mpz_t(), k);

    mpz_class first;  // smallest integer > Y1^k
    mpz_fdiv_q(first.get_mpz_t(), num1_k.get_mpz_t(), den1_k.get_mpz_t());
    first += 1;
    if (first < 2) first = 2;

    mpz_class last = strict_floor(num2_k, den2_k);  // largest integer < Y2^k
    if (last > n) last = n;

    if (last >= first) {
      total += last - first + 1;
      if (total > static_cast<unsigned long>(budget)) {
        throw budget_error(
            "breakpoint enumeration needs more than " +
            std::to_string(budget) +
            " candidate points; raise the budget or use mc_estimate");
      }
      ranges.push_back({k, first, last});
    }
  }

  out.points.reserve(total.get_ui());
  for (const Range& r : ranges) {
    for (mpz_class m = r.first; m <= r.last; m += 1) {
      out.points.emplace_back(m, r.k);
    }
  }

  std::sort(out.points.begin(), out.points.end(),
            [](const RootOfInt& a, const RootOfInt& b) {
              return radical_cmp(a, b) < 0;
            });
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  return out;
}

}  // namespace romlab
