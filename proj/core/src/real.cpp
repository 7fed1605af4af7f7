#include "spingap/real.hpp"

#include <cstdlib>

#include "spingap/errors.hpp"

namespace spingap {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) fail(ErrorKind::OutOfRange, "precision must be >= 1 digit");
  const long long bits = (static_cast<long long>(digits) * 3321929 + 999999) / 1000000 + 8;
  return static_cast<mpfr_prec_t>(bits);
}

Real Real::of(long value, int digits) {
  Real r(bits_for_digits(digits));
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& value, int digits) {
  Real r(bits_for_digits(digits));
  mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(double value, int digits) {
  Real r(bits_for_digits(digits));
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::pow10(long exp, int digits) {
  Real r(bits_for_digits(digits));
  mpfr_set_si(r.v_, exp, MPFR_RNDN);
  mpfr_exp10(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt_of(const BigInt& radicand, int digits) {
  if (radicand < 0) fail(ErrorKind::OutOfRange, "negative radicand");
  Real r(bits_for_digits(digits));
  mpfr_set_z(r.v_, radicand.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::ln() const {
  Real r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational Real::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

double Real::log10_approx() const {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

std::string Real::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10,
                           static_cast<size_t>(significant_digits), v_,
                           MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // value = 0.digits * 10^exp10; leading digit's power of ten:
  const long e = static_cast<long>(exp10) - 1;

  std::string out = sign;
  if (e >= -4 && e <= 15) {
    if (e >= 0) {
      if (static_cast<long>(digits.size()) <= e) {
        digits += std::string(e + 1 - digits.size(), '0');
        out += digits;
      } else {
        out += digits.substr(0, e + 1);
        if (digits.size() > static_cast<size_t>(e + 1)) {
          out += '.';
          out += digits.substr(e + 1);
        }
      }
    } else {
      out += "0.";
      out += std::string(-e - 1, '0');
      out += digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += (e < 0 ? "-" : "+");
    out += std::to_string(std::labs(e));
  }
  return out;
}

}  // namespace spingap
