#include "romlab/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "romlab/factorization.hpp"
#include "romlab/power_floor.hpp"

namespace romlab {

namespace {

using u64 = std::uint64_t;

// Max run length in the sorted residue buffer, plus the smallest residue
// attaining it (sorted order makes the first maximal run the smallest).
std::pair<u64, u64> max_residue_count(std::vector<u64>& buf) {
  std::sort(buf.begin(), buf.end());
  u64 best = 0, best_res = 0;
  std::size_t i = 0;
  while (i < buf.size()) {
    std::size_t j = i;
    while (j < buf.size() && buf[j] == buf[i]) ++j;
    if (j - i > best) {
      best = j - i;
      best_res = buf[i];
    }
    i = j;
  }
  return {best, best_res};
}

}  // namespace

FnProfile fn_profile(const RationalY& y, std::uint64_t n_limit, unsigned k_min,
                     std::uint64_t d_max, FnMode mode, bool keep_per_d) {
  if (n_limit < 1) throw std::invalid_argument("fn_profile requires N >= 1");
  if (d_max == 0) d_max = n_limit;
  if (d_max > n_limit) {
    throw std::invalid_argument("fn_profile requires d_max <= N");
  }

  const PowerFloorSeq seq = floor_pow_seq(y, n_limit, k_min);

  FnProfile out{y,       n_limit,      k_min, d_max, mode,
                mpq_class(0), 0.0, 0.0,   std::nullopt};
  if (keep_per_d) out.per_d.emplace();

  if (seq.empty()) return out;  // max over an empty k-range is 0 for every d

  // Exact mode accumulates sum(max_d * (L/d)) / L over the common
  // denominator L = lcm(1..d_max): one divexact+addmul per d instead of a
  // rational gcd per term.
  mpz_class lcm_all(1), acc(0);
  if (mode == FnMode::exact) {
    for (u64 d = 2; d <= d_max; ++d) {
      mpz_lcm_ui(lcm_all.get_mpz_t(), lcm_all.get_mpz_t(), d);
    }
  }
  double fsum = 0.0, comp = 0.0;  // Kahan compensation for float mode

  std::vector<u64> buf(seq.floors.size());
  for (u64 d = 1; d <= d_max; ++d) {
    for (std::size_t i = 0; i < seq.floors.size(); ++i) {
      buf[i] = seq.floors[i] % d;
    }
    auto [max_count, argmax] = max_residue_count(buf);
    if (keep_per_d) out.per_d->push_back({d, max_count, argmax});

    if (mode == FnMode::exact) {
      mpz_class term;
      mpz_divexact_ui(term.get_mpz_t(), lcm_all.get_mpz_t(), d);
      acc += term * static_cast<unsigned long>(max_count);
    } else {
      const double t = static_cast<double>(max_count) / static_cast<double>(d);
      const double v = t - comp;
      const double s = fsum + v;
      comp = (s - fsum) - v;
      fsum = s;
    }
  }

  if (mode == FnMode::exact) {
    out.value_exact = mpq_class(acc, lcm_all);
    out.value_exact.canonicalize();
    out.value = out.value_exact.get_d();
  } else {
    out.value = fsum;
  }
  // rho is a diagnostic ratio; N = 1 (ln N = 0) degenerates to 0.
  const double ln_n = std::log(static_cast<double>(n_limit));
  out.rho = (out.value == 0.0 || ln_n <= 0.0) ? 0.0 : out.value / ln_n;
  return out;
}

PairSumResult pair_sum(const RationalY& y, std::uint64_t n_limit,
                       unsigned k_min, const PrimeSet& primes) {
  const PowerFloorSeq seq = floor_pow_seq(y, n_limit, k_min);
  PairSumResult out{y, n_limit, k_min, mpq_class(0), 0};

  for (std::size_t i = 0; i < seq.floors.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.floors.size(); ++j) {
      const u64 diff = seq.floors[j] - seq.floors[i];
      if (diff == 0) {
        ++out.zero_diff_pairs;
        continue;
      }
      const Factorization f =
          factorize(mpz_class(static_cast<unsigned long>(diff)), primes);
      out.value += one_plus_inv_p_product(f);
    }
  }
  out.value.canonicalize();
  return out;
}

RearrangementCheck rearrangement_check(const RationalY& y,
                                       std::uint64_t n_limit, unsigned k_min,
                                       const PrimeSet& primes) {
  const PairSumResult ps = pair_sum(y, n_limit, k_min, primes);
  const FnProfile fn = fn_profile(y, n_limit, k_min, 0, FnMode::exact);
  const PowerFloorSeq seq = floor_pow_seq(y, n_limit, k_min);

  RearrangementCheck out;
  out.eq1 = ps.value;
  out.k_count = seq.count();
  mpq_class half_k(static_cast<unsigned long>(out.k_count), 2);
  half_k.canonicalize();
  out.bound = half_k * fn.value_exact;
  out.holds = out.eq1 <= out.bound;
  return out;
}

}  // namespace romlab
