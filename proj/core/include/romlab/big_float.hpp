#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace romlab {

enum class Round { down, up, nearest };

/// Minimal RAII wrapper over mpfr_t for the directed-rounding arithmetic the
/// enclosure code needs. Every operation takes an explicit rounding
/// direction; nothing here rounds silently.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision_bits = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  static BigFloat from_ui(unsigned long v, mpfr_prec_t prec, Round r);
  static BigFloat from_q(const mpq_class& q, mpfr_prec_t prec, Round r);
  static BigFloat pi(mpfr_prec_t prec, Round r);

  BigFloat add(const BigFloat& o, Round r) const;
  BigFloat sub(const BigFloat& o, Round r) const;
  BigFloat mul(const BigFloat& o, Round r) const;
  BigFloat div(const BigFloat& o, Round r) const;
  BigFloat mul_q(const mpq_class& q, Round r) const;
  BigFloat log(Round r) const;

  /// k-th root of the integer m at this object's precision (static builder).
  static BigFloat root_of(const mpz_class& m, unsigned k, mpfr_prec_t prec,
                          Round r);

  int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  /// Decimal rendering with `digits` significant digits, rounded in the
  /// given direction (so printed enclosures stay enclosures).
  std::string str(int digits, Round r) const;

  /// Lossless hexadecimal ("%Ra") rendering; from_hex inverts it exactly.
  std::string hex() const;
  static BigFloat from_hex(const std::string& s, mpfr_prec_t prec);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.x_, b.x_) != 0;
  }

 private:
  mpfr_t x_;
};

}  // namespace romlab
