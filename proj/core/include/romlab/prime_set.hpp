#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace romlab {

/// Complete prime table up to `limit`: a bit per integer in [0, limit]
/// (bit n set iff n is prime) plus the ascending list of primes. Immutable
/// after construction and freely shareable across threads.
class PrimeSet {
 public:
  std::uint64_t limit() const { return limit_; }

  bool contains(std::uint64_t n) const {
    if (n > limit_) return false;
    return (bits_[n >> 6] >> (n & 63)) & 1u;
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t count() const { return primes_.size(); }

  /// Raw membership words (64 bits each, bit n of word n/64 = primality of
  /// n); used by the shift-or sumset kernel and the binary cache format.
  std::span<const std::uint64_t> words() const { return bits_; }

  /// Rebuilds a PrimeSet from raw membership words (cache load path). The
  /// primes list is re-derived from the bits.
  static PrimeSet from_words(std::uint64_t limit,
                             std::vector<std::uint64_t> words);

 private:
  friend PrimeSet sieve(std::uint64_t limit);
  PrimeSet() = default;

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> primes_;
};

/// Segmented sieve of Eratosthenes up to limit (inclusive). Requires
/// limit >= 2. Block size keeps the working set cache-resident; the full
/// bit table is the result, so memory is O(limit/8) regardless.
PrimeSet sieve(std::uint64_t limit);

}  // namespace romlab
