#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "romlab/prime_set.hpp"
#include "romlab/rational_y.hpp"

namespace romlab {

/// Counting results for the sumset {p + ⌊y^k⌋} intersected with [1, N],
/// together with the representation statistics that feed the
/// Cauchy-Schwarz density lower bound:
///   r(n) = #{(p, k) : p + ⌊y^k⌋ = n},  R1 = Σ r(n),  R2 = Σ r(n)^2,
///   cs_lower = R1^2 / (R2 * N)  <=  count / N = density.
struct SumsetResult {
  RationalY y;
  std::uint64_t n_limit = 0;
  unsigned k_min = 1;
  std::uint64_t count = 0;
  mpq_class density;   // count / N, exact
  mpz_class r1;
  mpz_class r2;
  mpq_class cs_lower;  // 0 when R2 = 0
};

/// Counts distinct n <= N of the form p + ⌊y^k⌋ (p prime, k >= k_min) by
/// OR-ing the prime bit array under shifts by each floor value; R1/R2 come
/// from per-n multiplicity tallies over the same (p, k) pairs. Requires
/// primes.limit() >= N.
SumsetResult sumset_count(const RationalY& y, std::uint64_t n_limit,
                          unsigned k_min, const PrimeSet& primes);

}  // namespace romlab
