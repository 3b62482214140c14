// Independent brute-force reference implementations for the test suites.
// Everything here recomputes results from first principles (trial division,
// direct enumeration, per-term rational sums) and deliberately shares no
// code with the library paths it checks.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<u64> primes_upto(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Floor powers by repeated exact rational multiplication.
inline std::vector<u64> floor_powers(const mpq_class& y, u64 n_limit,
                                     unsigned k_min) {
  std::vector<u64> floors;
  mpq_class p(1);
  for (unsigned k = 0; k < k_min; ++k) p *= y;
  for (unsigned k = k_min;; ++k) {
    if (p > static_cast<unsigned long>(n_limit)) break;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), p.get_num().get_mpz_t(),
               p.get_den().get_mpz_t());
    floors.push_back(f.get_ui());
    p *= y;
  }
  return floors;
}

struct SumsetStats {
  std::set<u64> members;
  mpz_class r1{0};
  mpz_class r2{0};
};

// Double loop over primes and floor powers (prime table built once by trial
// division).
inline SumsetStats sumset(const mpq_class& y, u64 n_limit, unsigned k_min) {
  SumsetStats st;
  std::map<u64, u64> rep;
  const std::vector<u64> primes = primes_upto(n_limit);
  for (u64 f : floor_powers(y, n_limit, k_min)) {
    for (u64 p : primes) {
      if (p + f > n_limit) break;
      st.members.insert(p + f);
      ++rep[p + f];
    }
  }
  for (const auto& [n, c] : rep) {
    st.r1 += static_cast<unsigned long>(c);
    st.r2 += mpz_class(static_cast<unsigned long>(c)) *
             static_cast<unsigned long>(c);
  }
  return st;
}

// f_N by direct residue histograms and per-term rational accumulation.
inline mpq_class fn_value(const mpq_class& y, u64 n_limit, unsigned k_min,
                          u64 d_max) {
  const std::vector<u64> floors = floor_powers(y, n_limit, k_min);
  mpq_class total(0);
  for (u64 d = 1; d <= d_max; ++d) {
    std::map<u64, u64> hist;
    for (u64 f : floors) ++hist[f % d];
    u64 best = 0;
    for (const auto& [r, c] : hist) best = std::max(best, c);
    mpq_class term(mpz_class(static_cast<unsigned long>(best)),
                   mpz_class(static_cast<unsigned long>(d)));
    term.canonicalize();
    total += term;
  }
  return total;
}

// Pair sum by enumeration + trial-division factoring.
inline mpq_class pair_sum(const mpq_class& y, u64 n_limit, unsigned k_min,
                          u64* zero_pairs_out = nullptr) {
  const std::vector<u64> floors = floor_powers(y, n_limit, k_min);
  mpq_class total(0);
  u64 zero_pairs = 0;
  for (std::size_t i = 0; i < floors.size(); ++i) {
    for (std::size_t j = i + 1; j < floors.size(); ++j) {
      const u64 diff = floors[j] - floors[i];
      if (diff == 0) {
        ++zero_pairs;
        continue;
      }
      mpq_class prod(1);
      for (const auto& [p, e] : factor(diff)) {
        prod *= mpq_class(static_cast<unsigned long>(p + 1),
                          static_cast<unsigned long>(p));
        prod.canonicalize();
      }
      total += prod;
    }
  }
  if (zero_pairs_out) *zero_pairs_out = zero_pairs;
  return total;
}

// Radical breakpoints of (y1, y2) by direct scan: every integer m <= n_limit
// and exponent k with y1^k < m < y2^k, compared exactly.
inline std::vector<std::pair<u64, unsigned>> breakpoints(
    const mpq_class& y1, const mpq_class& y2, u64 n_limit, unsigned k_min) {
  std::vector<std::pair<u64, unsigned>> out;
  mpq_class p1(1), p2(1);
  const unsigned k_lo = k_min < 1 ? 1 : k_min;
  for (unsigned k = 1; k < k_lo; ++k) {
    p1 *= y1;
    p2 *= y2;
  }
  for (unsigned k = k_lo;; ++k) {
    p1 *= y1;
    p2 *= y2;
    if (p1 > static_cast<unsigned long>(n_limit)) break;  // k out of range
    for (u64 m = 2; m <= n_limit; ++m) {
      if (p1 < static_cast<unsigned long>(m) &&
          mpq_class(static_cast<unsigned long>(m)) < p2) {
        out.emplace_back(m, k);
      }
    }
  }
  return out;
}

}  // namespace oracle
