#include "romlab/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace romlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
u64 rho_u64(u64 n, u64 seed) {
  if (n % 2 == 0) return 2;
  u64 c = seed;
  while (true) {
    u64 x = 2, y = 2, d = 1, saved = 1;
    int power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (mulmod(y, y, n) + c) % n;
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      saved = mulmod(saved, diff, n);
      if (lam % 128 == 0) {
        d = std::gcd(saved, n);
        saved = 1;
      }
    }
    if (d == 1 && saved != 1) d = std::gcd(saved, n);
    if (d != 1 && d != n) return d;
    ++c;  // cycle collapsed onto n; retry with the next polynomial
  }
}

void factor_u64_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho_u64(n, 1);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

// mpz rho for remainders beyond 64 bits. Same Brent scheme on mpz_class.
mpz_class rho_mpz(const mpz_class& n, unsigned long seed) {
  mpz_class c(seed);
  while (true) {
    mpz_class x(2), y(2), d(1), saved(1);
    long power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (y * y + c) % n;
      ++lam;
      mpz_class diff = abs(x - y);
      if (diff == 0) break;
      saved = saved * diff % n;
      if (lam % 128 == 0) {
        mpz_gcd(d.get_mpz_t(), saved.get_mpz_t(), n.get_mpz_t());
        saved = 1;
      }
    }
    if (d == 1 && saved != 1) {
      mpz_gcd(d.get_mpz_t(), saved.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
    c += 1;
  }
}

void factor_mpz_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    std::vector<u64> small;
    factor_u64_into(n.get_ui(), small);
    for (u64 p : small) out.emplace_back(static_cast<unsigned long>(p));
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  mpz_class d = rho_mpz(n, 1);
  factor_mpz_into(d, out);
  factor_mpz_into(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic below 2^64 with these witnesses.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(const mpz_class& n, const PrimeSet& primes,
                        const FactorOptions& opts) {
  if (n == 0) throw std::invalid_argument("factorize requires n >= 1");
  if (n < 0) throw std::invalid_argument("factorize requires n >= 1");

  Factorization result{n, {}};
  mpz_class rem = n;

  for (u64 p : primes.primes()) {
    // p^2 > rem means rem is prime (every smaller prime already divided out);
    // when rem does not fit a word it certainly exceeds p^2 for sieve-scale p.
    if (mpz_fits_ulong_p(rem.get_mpz_t()) && u128(p) * p > rem.get_ui()) break;
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    unsigned exp = 0;
    do {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++exp;
    } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
    result.factors.emplace_back(static_cast<unsigned long>(p), exp);
    if (rem == 1) break;
  }

  if (rem > 1) {
    // Either a single prime below limit^2, or the fallback finishes the job.
    mpz_class limit_sq =
        mpz_class(static_cast<unsigned long>(primes.limit())) *
        static_cast<unsigned long>(primes.limit());
    if (rem <= limit_sq) {
      result.factors.emplace_back(rem, 1);
    } else if (!opts.allow_rho_fallback) {
      throw std::runtime_error(
          "factorize: trial division exhausted (n has a factor above "
          "primes.limit()^2) and the rho fallback is disabled");
    } else {
      std::vector<mpz_class> ps;
      factor_mpz_into(rem, ps);
      std::sort(ps.begin(), ps.end());
      for (std::size_t i = 0; i < ps.size();) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        result.factors.emplace_back(ps[i], static_cast<unsigned>(j - i));
        i = j;
      }
    }
  }
  return result;
}

mpq_class one_plus_inv_p_product(const Factorization& f) {
  mpq_class prod(1);
  for (const auto& [p, exp] : f.factors) {
    prod *= mpq_class(p + 1, p);
  }
  prod.canonicalize();
  return prod;
}

}  // namespace romlab
