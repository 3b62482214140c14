#include "romlab/sumset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "romlab/power_floor.hpp"

namespace romlab {

namespace {

using u64 = std::uint64_t;

// dst |= src << shift, over whole words. dst and src cover the same bit
// count; bits shifted beyond the end are dropped.
void or_shifted(std::vector<u64>& dst, const std::vector<u64>& src,
                u64 shift) {
  const u64 ws = shift / 64;
  const unsigned bs = static_cast<unsigned>(shift % 64);
  const std::size_t n = dst.size();
  if (bs == 0) {
    for (std::size_t w = n; w-- > ws;) dst[w] |= src[w - ws];
  } else {
    for (std::size_t w = n; w-- > ws;) {
      u64 v = src[w - ws] << bs;
      if (w - ws >= 1) v |= src[w - ws - 1] >> (64 - bs);
      dst[w] |= v;
    }
  }
}

// Sum of r(n)^2 and the support count, tallying (p, k) pair hits per n.
template <typename CountT>
void tally(const std::vector<u64>& floors, const std::vector<u64>& primes,
           u64 n_limit, mpz_class& r1, mpz_class& r2, u64& support) {
  std::vector<CountT> counts(n_limit + 1, 0);
  u64 pair_total = 0;
  for (u64 f : floors) {
    if (f >= n_limit) break;  // no prime fits below 2
    const u64 pmax = n_limit - f;
    auto end = std::upper_bound(primes.begin(), primes.end(), pmax);
    for (auto it = primes.begin(); it != end; ++it) {
      ++counts[*it + f];
    }
    pair_total += static_cast<u64>(end - primes.begin());
  }
  r1 = static_cast<unsigned long>(pair_total);
  mpz_class sq(0);
  u64 nonzero = 0;
  unsigned long acc = 0;
  for (u64 n = 1; n <= n_limit; ++n) {
    const u64 c = counts[n];
    if (!c) continue;
    ++nonzero;
    acc += c * c;
    if (acc >= (1ull << 62)) {
      sq += acc;
      acc = 0;
    }
  }
  sq += acc;
  r2 = sq;
  support = nonzero;
}

}  // namespace

SumsetResult sumset_count(const RationalY& y, std::uint64_t n_limit,
                          unsigned k_min, const PrimeSet& primes) {
  if (n_limit < 1) throw std::invalid_argument("sumset_count requires N >= 1");
  if (primes.limit() < n_limit) {
    throw std::invalid_argument(
        "sumset_count requires primes.limit() >= N (sieve limit too small)");
  }

  const PowerFloorSeq seq = floor_pow_seq(y, n_limit, k_min);

  SumsetResult res{y, n_limit, k_min, 0, mpq_class(0), mpz_class(0),
                   mpz_class(0), mpq_class(0)};
  if (seq.empty()) return res;

  // Support via shifted OR of the prime bits; duplicate floor values add
  // nothing to the union, so only distinct shifts are applied.
  const std::size_t words = n_limit / 64 + 1;
  std::vector<u64> prime_bits(primes.words().begin(),
                              primes.words().begin() + words);
  if ((n_limit + 1) % 64 != 0) {
    prime_bits.back() &= (u64(1) << ((n_limit + 1) % 64)) - 1;
  }
  std::vector<u64> hit(words, 0);
  u64 prev = 0;
  bool first = true;
  for (u64 f : seq.floors) {
    if (!first && f == prev) continue;
    or_shifted(hit, prime_bits, f);
    prev = f;
    first = false;
  }
  if ((n_limit + 1) % 64 != 0) {
    hit.back() &= (u64(1) << ((n_limit + 1) % 64)) - 1;
  }
  // Bits 0 and 1 stay clear (p >= 2 and f >= 1), so a full popcount is the
  // count over [1, N].
  u64 support = 0;
  for (u64 w : hit) support += static_cast<u64>(std::popcount(w));

  // Representation multiplicities; counts fit 16 bits unless the exponent
  // range is enormous (y barely above 1).
  u64 support_check = 0;
  if (seq.count() < 0xFFFF) {
    tally<std::uint16_t>(seq.floors, primes.primes(), n_limit, res.r1, res.r2,
                         support_check);
  } else {
    tally<std::uint32_t>(seq.floors, primes.primes(), n_limit, res.r1, res.r2,
                         support_check);
  }

  res.count = support;
  res.density = mpq_class(mpz_class(static_cast<unsigned long>(support)),
                          mpz_class(static_cast<unsigned long>(n_limit)));
  res.density.canonicalize();
  if (res.r2 > 0) {
    res.cs_lower = mpq_class(res.r1 * res.r1,
                             res.r2 * static_cast<unsigned long>(n_limit));
    res.cs_lower.canonicalize();
  }
  if (support_check != support) {
    throw std::logic_error("sumset_count: bitset support disagrees with "
                           "multiplicity tally");
  }
  return res;
}

}  // namespace romlab
