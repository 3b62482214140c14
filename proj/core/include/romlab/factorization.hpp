#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "romlab/prime_set.hpp"

namespace romlab {

/// Exact complete factorization of n >= 1: ascending (prime, exponent)
/// pairs whose product reconstructs n. n = 1 carries an empty list.
struct Factorization {
  mpz_class n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
};

struct FactorOptions {
  /// When trial division by the supplied primes cannot finish (n has a
  /// factor above limit^2), split the remainder with Brent-cycle rho +
  /// a deterministic Miller-Rabin primality test. Disabling this makes
  /// exhaustion a contract error instead.
  bool allow_rho_fallback = true;
};

/// Factors n completely. Trial division by `primes` first; the rho fallback
/// (see FactorOptions) guarantees completeness beyond primes.limit()^2.
/// Throws std::invalid_argument for n = 0, std::runtime_error if the
/// fallback is disabled and trial division exhausts.
Factorization factorize(const mpz_class& n, const PrimeSet& primes,
                        const FactorOptions& opts = {});

/// Product over the distinct primes p | n of (1 + 1/p), as an exact
/// rational. Equals the sum of 1/d over squarefree divisors d of n;
/// 1 for n = 1.
mpq_class one_plus_inv_p_product(const Factorization& f);

/// Deterministic primality test for 64-bit n (Miller-Rabin on a fixed base
/// set proven exact below 2^64). Exposed for tests.
bool is_prime_u64(std::uint64_t n);

}  // namespace romlab
