#include "romlab/power_floor.hpp"

#include <cmath>

#include "romlab/errors.hpp"

namespace romlab {

mpz_class floor_pow(const RationalY& y, unsigned k) {
  mpz_class num_k, den_k;
  mpz_pow_ui(num_k.get_mpz_t(), y.num().get_mpz_t(), k);
  mpz_pow_ui(den_k.get_mpz_t(), y.den().get_mpz_t(), k);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_k.get_mpz_t(), den_k.get_mpz_t());
  return q;
}

PowerFloorSeq floor_pow_seq(const RationalY& y, std::uint64_t n_limit,
                            unsigned k_min, std::size_t max_terms) {
  if (n_limit < 1) throw std::invalid_argument("floor_pow_seq requires N >= 1");

  // K ~ log N / log y; refuse pathological y barely above 1 up front.
  double est = std::log(static_cast<double>(n_limit)) /
               std::log(y.value().get_d());
  if (est > static_cast<double>(max_terms) + 1.0) {
    throw budget_error(
        "floor-power sequence would have ~" + std::to_string(est) +
        " terms, over the " + std::to_string(max_terms) + " budget");
  }

  PowerFloorSeq seq{y, n_limit, k_min, {}};
  const mpz_class num = y.num();
  const mpz_class den = y.den();
  const mpz_class n(static_cast<unsigned long>(n_limit));
  mpz_class num_k, den_k;
  mpz_pow_ui(num_k.get_mpz_t(), num.get_mpz_t(), k_min);
  mpz_pow_ui(den_k.get_mpz_t(), den.get_mpz_t(), k_min);

  while (num_k <= n * den_k) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), num_k.get_mpz_t(), den_k.get_mpz_t());
    seq.floors.push_back(f.get_ui());
    if (seq.floors.size() > max_terms) {
      throw budget_error("floor-power sequence exceeded its term budget");
    }
    num_k *= num;
    den_k *= den;
  }
  return seq;
}

}  // namespace romlab
