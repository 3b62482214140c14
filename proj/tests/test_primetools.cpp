#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "romlab/factorization.hpp"
#include "romlab/prime_set.hpp"

using namespace romlab;

TEST_CASE("sieve small counts") {
  const PrimeSet p10 = sieve(10);
  CHECK(p10.primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve(100).count() == 25);
  CHECK_THROWS_AS(sieve(1), std::invalid_argument);
  CHECK(sieve(2).primes() == std::vector<std::uint64_t>{2});
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
  const PrimeSet ps = sieve(10000);
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    CHECK(ps.contains(n) == oracle::is_prime(n));
  }
  CHECK(ps.primes() == oracle::primes_upto(10000));
}

TEST_CASE("sieve crosses segment boundaries correctly") {
  // Limits straddling the 2^21-bit segment size.
  const PrimeSet ps = sieve((1u << 21) + 1000);
  std::uint64_t checked = 0;
  for (std::uint64_t n = (1u << 21) - 100; n <= (1u << 21) + 1000; ++n) {
    CHECK(ps.contains(n) == oracle::is_prime(n));
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("factorize stated examples") {
  const PrimeSet ps = sieve(100);
  const Factorization f6 = factorize(6, ps);
  REQUIRE(f6.factors.size() == 2);
  CHECK(f6.factors[0] == std::pair<mpz_class, unsigned>{2, 1});
  CHECK(f6.factors[1] == std::pair<mpz_class, unsigned>{3, 1});

  const Factorization f360 = factorize(360, ps);
  REQUIRE(f360.factors.size() == 3);
  CHECK(f360.factors[0] == std::pair<mpz_class, unsigned>{2, 3});
  CHECK(f360.factors[1] == std::pair<mpz_class, unsigned>{3, 2});
  CHECK(f360.factors[2] == std::pair<mpz_class, unsigned>{5, 1});

  CHECK(factorize(1, ps).factors.empty());
  CHECK_THROWS_AS(factorize(0, ps), std::invalid_argument);
}

TEST_CASE("factorize reconstructs 10^5 random n <= 10^12") {
  const PrimeSet ps = sieve(10000);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t n = 1 + rng() % 1000000000000ull;
    const Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)), ps);
    mpz_class prod(1);
    mpz_class prev(0);
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);  // strictly increasing primes
      prev = p;
      for (unsigned j = 0; j < e; ++j) prod *= p;
    }
    CHECK(prod == static_cast<unsigned long>(n));
  }
}

TEST_CASE("factorize listed factors are prime") {
  const PrimeSet ps = sieve(100);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 2 + rng() % 100000000;
    for (const auto& [p, e] : factorize(mpz_class(static_cast<unsigned long>(n)), ps).factors) {
      CHECK(is_prime_u64(p.get_ui()));
    }
  }
}

TEST_CASE("factorize without fallback throws on exhaustion") {
  const PrimeSet tiny = sieve(10);
  FactorOptions opts;
  opts.allow_rho_fallback = false;
  // 10007 * 10009 has no factor below 100 = limit^2 boundary.
  CHECK_THROWS_AS(factorize(mpz_class(10007) * 10009, tiny, opts),
                  std::runtime_error);
  // With the fallback the same input factors completely.
  const Factorization f = factorize(mpz_class(10007) * 10009, tiny);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == 10007);
  CHECK(f.factors[1].first == 10009);
}

TEST_CASE("is_prime_u64 agrees with trial division") {
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    CHECK(is_prime_u64(n) == oracle::is_prime(n));
  }
}

TEST_CASE("one_plus_inv_p_product stated examples") {
  const PrimeSet ps = sieve(100);
  CHECK(one_plus_inv_p_product(factorize(2, ps)) == mpq_class(3, 2));
  CHECK(one_plus_inv_p_product(factorize(6, ps)) == 2);
  CHECK(one_plus_inv_p_product(factorize(4, ps)) == mpq_class(3, 2));
  CHECK(one_plus_inv_p_product(factorize(1, ps)) == 1);
}

TEST_CASE("squarefree-divisor identity for all n <= 10^4") {
  const PrimeSet ps = sieve(200);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    mpq_class divisor_sum(0);
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      bool squarefree = true;
      for (std::uint64_t q = 2; q * q <= d; ++q) {
        if (d % (q * q) == 0) {
          squarefree = false;
          break;
        }
      }
      if (squarefree) {
        divisor_sum += mpq_class(1, static_cast<unsigned long>(d));
      }
    }
    CHECK(one_plus_inv_p_product(
              factorize(mpz_class(static_cast<unsigned long>(n)), ps)) ==
          divisor_sum);
  }
}
