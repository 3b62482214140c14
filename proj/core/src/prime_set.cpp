#include "romlab/prime_set.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace romlab {

namespace {

constexpr std::uint64_t kSegmentBits = 1u << 21;  // 256 KiB working window

void clear_bit(std::vector<std::uint64_t>& bits, std::uint64_t n) {
  bits[n >> 6] &= ~(std::uint64_t(1) << (n & 63));
}

std::vector<std::uint64_t> extract_primes(
    const std::vector<std::uint64_t>& bits, std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit > 100) {
    primes.reserve(static_cast<std::size_t>(
        static_cast<double>(limit) /
        (std::log(static_cast<double>(limit)) - 1.1)));
  }
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      primes.push_back(w * 64 + static_cast<unsigned>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return primes;
}

}  // namespace

PrimeSet sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve requires limit >= 2");

  PrimeSet ps;
  ps.limit_ = limit;
  ps.bits_.assign(limit / 64 + 1, ~std::uint64_t(0));
  clear_bit(ps.bits_, 0);
  clear_bit(ps.bits_, 1);
  // Mask tail bits beyond limit so whole-word consumers see zeros there.
  if ((limit + 1) % 64 != 0) {
    ps.bits_.back() &= (std::uint64_t(1) << ((limit + 1) % 64)) - 1;
  }

  // Base primes up to sqrt(limit) by direct scan, then cross off the rest
  // segment by segment.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint64_t> base;
  for (std::uint64_t p = 2; p <= root && p <= limit; ++p) {
    if (!ps.contains(p)) continue;
    base.push_back(p);
    for (std::uint64_t c = p * p; c <= root && c <= limit; c += p) {
      clear_bit(ps.bits_, c);
    }
  }

  for (std::uint64_t low = root + 1; low <= limit; low += kSegmentBits) {
    const std::uint64_t high = std::min(limit, low + kSegmentBits - 1);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = ((low + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (std::uint64_t c = start; c <= high; c += p) {
        clear_bit(ps.bits_, c);
      }
    }
  }

  ps.primes_ = extract_primes(ps.bits_, limit);
  return ps;
}

PrimeSet PrimeSet::from_words(std::uint64_t limit,
                              std::vector<std::uint64_t> words) {
  if (limit < 2 || words.size() != limit / 64 + 1) {
    throw std::invalid_argument("membership word count inconsistent with limit");
  }
  PrimeSet ps;
  ps.limit_ = limit;
  ps.bits_ = std::move(words);
  ps.primes_ = extract_primes(ps.bits_, limit);
  return ps;
}

}  // namespace romlab
