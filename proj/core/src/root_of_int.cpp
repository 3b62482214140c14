#include "romlab/root_of_int.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace romlab {

namespace {

// m^e as mpz.
mpz_class pow_z(const mpz_class& m, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), m.get_mpz_t(), e);
  return r;
}

// floor(m^(1/k)).
mpz_class root_floor(const mpz_class& m, unsigned k) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  return r;
}

// log2 of the represented value; error well below 1e-12 for any input that
// fits a double mantissa path, which is all we rely on (prefilter threshold
// is 1e-9).
double log2_of_radical(const mpz_class& m, unsigned k) {
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, m.get_mpz_t());
  return (std::log2(d) + static_cast<double>(exp2)) / static_cast<double>(k);
}

constexpr double kLogGapThreshold = 1e-9;

}  // namespace

RootOfInt::RootOfInt(mpz_class radicand, unsigned index)
    : radicand_(std::move(radicand)), index_(index) {
  if (index_ == 0) throw std::invalid_argument("RootOfInt index must be >= 1");
  if (radicand_ < 2) {
    throw std::invalid_argument("RootOfInt radicand must be >= 2");
  }
  // Reduce (m, k) -> (m^(1/q), k/q) for any prime q | k with m an exact q-th
  // power, until no prime factor of k reduces. The result is the unique
  // minimal representation, so equal reals have equal fields.
  bool changed = true;
  while (changed && index_ > 1) {
    changed = false;
    unsigned rem = index_;
    for (unsigned q = 2; q * q <= rem && !changed; ++q) {
      if (rem % q != 0) continue;
      while (rem % q == 0) rem /= q;
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), radicand_.get_mpz_t(), q) != 0) {
        radicand_ = r;
        index_ /= q;
        changed = true;
      }
    }
    if (!changed && rem > 1) {
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), radicand_.get_mpz_t(), rem) != 0) {
        radicand_ = r;
        index_ /= rem;
        changed = true;
      }
    }
  }
}

std::string RootOfInt::str() const {
  if (index_ == 1) return radicand_.get_str();
  return radicand_.get_str() + "^(1/" + std::to_string(index_) + ")";
}

double RootOfInt::approx() const {
  return std::exp2(log2_of_radical(radicand_, index_));
}

int radical_cmp(const RootOfInt& a, const RootOfInt& b) {
  if (a.index() == b.index()) return cmp(a.radicand(), b.radicand()) < 0   ? -1
                                     : cmp(a.radicand(), b.radicand()) > 0 ? 1
                                                                           : 0;
  // Canonical forms are unique, so unequal fields mean unequal reals; the
  // double prefilter decides wide gaps, exact powers settle the rest.
  double gap = log2_of_radical(a.radicand(), a.index()) -
               log2_of_radical(b.radicand(), b.index());
  if (gap > kLogGapThreshold) return 1;
  if (gap < -kLogGapThreshold) return -1;
  mpz_class lhs = [&] {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.radicand().get_mpz_t(), b.index());
    return r;
  }();
  mpz_class rhs = [&] {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.radicand().get_mpz_t(), a.index());
    return r;
  }();
  int c = cmp(lhs, rhs);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int radical_cmp_rational(const RootOfInt& a, const mpq_class& q) {
  // m^(1/k) vs p/q  <=>  m * q^k vs p^k (all positive).
  mpz_class lhs = a.radicand() * pow_z(q.get_den(), a.index());
  mpz_class rhs = pow_z(q.get_num(), a.index());
  int c = cmp(lhs, rhs);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

ExactPoint::ExactPoint(mpq_class q)
    : rational_(std::move(q)), is_rational_(true) {
  rational_.canonicalize();
  if (rational_ <= 0) throw std::invalid_argument("ExactPoint must be positive");
}

mpz_class ExactPoint::floor_scaled(unsigned t) const {
  if (is_rational_) {
    mpz_class scaled = rational_.get_num();
    scaled <<= t;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_mpz_t(),
               rational_.get_den().get_mpz_t());
    return r;
  }
  // floor(m^(1/k) * 2^t) = floor((m * 2^(t*k))^(1/k)).
  mpz_class shifted = radical_.radicand();
  shifted <<= static_cast<unsigned long>(t) * radical_.index();
  return root_floor(shifted, radical_.index());
}

int ExactPoint::cmp_rational(const mpq_class& q) const {
  if (is_rational_) {
    int c = cmp(rational_, q);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  return radical_cmp_rational(radical_, q);
}

double ExactPoint::approx() const {
  return is_rational_ ? rational_.get_d() : radical_.approx();
}

std::string ExactPoint::str() const {
  return is_rational_ ? rational_.get_str() : radical_.str();
}

int exact_point_cmp(const ExactPoint& a, const ExactPoint& b) {
  if (a.is_rational()) return -b.cmp_rational(a.rational());
  if (b.is_rational()) return a.cmp_rational(b.rational());
  return radical_cmp(a.radical(), b.radical());
}

mpq_class rational_between(const ExactPoint& lo, const ExactPoint& hi) {
  if (exact_point_cmp(lo, hi) >= 0) {
    throw std::invalid_argument("rational_between requires lo < hi");
  }
  // Start scale from a float gap estimate, then refine until the dyadic
  // step fits strictly inside. Every acceptance is exact.
  unsigned t = 0;
  double gap = hi.approx() - lo.approx();
  if (gap > 0 && std::isfinite(gap)) {
    double bits = -std::log2(gap);
    if (bits > 0) t = static_cast<unsigned>(std::min(bits + 2, 512.0));
  }
  for (;; ++t) {
    mpz_class i = lo.floor_scaled(t) + 1;  // i/2^t > lo, always strictly
    mpz_class den(1);
    den <<= t;
    mpq_class candidate(i, den);
    candidate.canonicalize();
    if (hi.cmp_rational(candidate) > 0) return candidate;
  }
}

RationalY rational_inside(const RootOfInt& lo, const RootOfInt& hi) {
  if (radical_cmp(lo, hi) >= 0) {
    throw std::invalid_argument("rational_inside requires lo < hi");
  }
  return RationalY(rational_between(ExactPoint(lo), ExactPoint(hi)));
}

}  // namespace romlab
