#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "spingap/rational.hpp"

namespace spingap {

/// Decimal working precision -> MPFR mantissa bits. Fixed conversion rule:
/// bits = ceil(digits * log2(10)) + 8 guard bits, using the rational upper
/// bound 3321929/1000000 >= log2(10) so the ceiling never under-rounds.
mpfr_prec_t bits_for_digits(int digits);

/// Value wrapper around mpfr_t. Every variable carries its own precision;
/// arithmetic rounds once, to nearest, into a result whose precision is the
/// maximum of the operand precisions. Copy/assign preserve the source
/// precision exactly, so a computation's rounding sequence is reproducible.
class Real {
 public:
  Real() : Real(mpfr_prec_t{64}) {}
  explicit Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real zero(int digits) { return Real(bits_for_digits(digits)); }
  static Real of(long value, int digits);
  static Real of(const Rational& value, int digits);
  static Real of(double value, int digits);
  /// 10^exp at the given working precision.
  static Real pow10(long exp, int digits);
  /// sqrt of an exact non-negative integer radicand, one rounding.
  static Real sqrt_of(const BigInt& radicand, int digits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real abs() const;
  Real sqrt() const;
  /// Natural log (value > 0).
  Real ln() const;

  Rational to_rational() const;  // exact: binary floats are dyadic
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  double log10_approx() const;

  /// Decimal rendering with the given number of significant digits.
  /// Positional form when the leading digit's power of ten lies in
  /// [-4, 15], scientific d.dd...e±X otherwise; "0" for zero.
  std::string str(int significant_digits) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(mpfr_get_prec(a.v_));
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long b) {
    Real r(mpfr_get_prec(a.v_));
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(mpfr_get_prec(a.v_));
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long b) {
    Real r(mpfr_get_prec(a.v_));
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(mpfr_get_prec(v_));
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  bool equals(long v) const { return mpfr_cmp_si(v_, v) == 0; }
  bool equals(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()) == 0; }

 private:
  static mpfr_prec_t result_prec(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

}  // namespace spingap
