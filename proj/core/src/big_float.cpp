#include "romlab/big_float.hpp"

#include <stdexcept>

namespace romlab {

namespace {

mpfr_rnd_t rnd(Round r) {
  switch (r) {
    case Round::down: return MPFR_RNDD;
    case Round::up: return MPFR_RNDU;
    case Round::nearest: return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision_bits) {
  mpfr_init2(x_, precision_bits);
  mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(x_, mpfr_get_prec(other.x_));
  mpfr_set(x_, other.x_, MPFR_RNDN);  // same precision: exact
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(x_, mpfr_get_prec(other.x_));
  mpfr_swap(x_, other.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(x_, other.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::from_ui(unsigned long v, mpfr_prec_t prec, Round r) {
  BigFloat out(prec);
  mpfr_set_ui(out.x_, v, rnd(r));
  return out;
}

BigFloat BigFloat::from_q(const mpq_class& q, mpfr_prec_t prec, Round r) {
  BigFloat out(prec);
  mpfr_set_q(out.x_, q.get_mpq_t(), rnd(r));
  return out;
}

BigFloat BigFloat::pi(mpfr_prec_t prec, Round r) {
  BigFloat out(prec);
  mpfr_const_pi(out.x_, rnd(r));
  return out;
}

BigFloat BigFloat::add(const BigFloat& o, Round r) const {
  BigFloat out(precision());
  mpfr_add(out.x_, x_, o.x_, rnd(r));
  return out;
}

BigFloat BigFloat::sub(const BigFloat& o, Round r) const {
  BigFloat out(precision());
  mpfr_sub(out.x_, x_, o.x_, rnd(r));
  return out;
}

BigFloat BigFloat::mul(const BigFloat& o, Round r) const {
  BigFloat out(precision());
  mpfr_mul(out.x_, x_, o.x_, rnd(r));
  return out;
}

BigFloat BigFloat::div(const BigFloat& o, Round r) const {
  BigFloat out(precision());
  mpfr_div(out.x_, x_, o.x_, rnd(r));
  return out;
}

BigFloat BigFloat::mul_q(const mpq_class& q, Round r) const {
  // No mpfr_mul_q; split into num multiply and den divide with matched
  // rounding (operands here are nonnegative, so directions compose).
  BigFloat out(precision());
  mpfr_mul_z(out.x_, x_, q.get_num().get_mpz_t(), rnd(r));
  mpfr_div_z(out.x_, out.x_, q.get_den().get_mpz_t(), rnd(r));
  return out;
}

BigFloat BigFloat::log(Round r) const {
  BigFloat out(precision());
  mpfr_log(out.x_, x_, rnd(r));
  return out;
}

BigFloat BigFloat::root_of(const mpz_class& m, unsigned k, mpfr_prec_t prec,
                           Round r) {
  BigFloat out(prec);
  mpfr_set_z(out.x_, m.get_mpz_t(), rnd(r));
  mpfr_rootn_ui(out.x_, out.x_, k, rnd(r));
  return out;
}

std::string BigFloat::str(int digits, Round r) const {
  char* buf = nullptr;
  const char fmt_dir = r == Round::down ? 'D' : r == Round::up ? 'U' : 'N';
  std::string fmt = "%." + std::to_string(digits) + "R" + fmt_dir + "g";
  if (mpfr_asprintf(&buf, fmt.c_str(), x_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::hex() const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%Ra", x_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::from_hex(const std::string& s, mpfr_prec_t prec) {
  BigFloat out(prec);
  if (mpfr_set_str(out.x_, s.c_str(), 16, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a hexadecimal float: " + s);
  }
  return out;
}

}  // namespace romlab
