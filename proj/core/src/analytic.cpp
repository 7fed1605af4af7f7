#include "spingap/analytic.hpp"

#include "spingap/precision.hpp"

namespace spingap {

namespace {

// All formulas are evaluated in twice-spin integer units: ts = 2S,
// st = 2*sigma = ts - 2n. Factorial arguments are then plain integers for
// integer and half-integer spin alike.

void require_sigma_ge_one(const LevelSpec& level, const char* what) {
  if (level.sigma_twice() < 2) {
    fail(ErrorKind::InvalidLevel,
         std::string(what) + " is defined for sigma >= 1 only (n = " +
             std::to_string(level.n()) + " has sigma = 1/2)");
  }
}

}  // namespace

Rational leading_coefficient(const SpinValue& spin, const LevelSpec& level) {
  const long ts = spin.twice();
  const long n = level.n();
  const long st = level.sigma_twice();
  if (st == 1) return Rational(ts + 1, 2);  // (S + 1/2) B
  Rational coeff(factorial(ts - n));
  coeff /= pow2(st - 1);
  coeff /= factorial(n);
  const BigInt f = factorial(st - 1);
  coeff /= f * f;
  return coeff;
}

Rational leading_gap_exact(const SpinValue& spin, const LevelSpec& level,
                           const FieldValue& field) {
  const long st = level.sigma_twice();
  return leading_coefficient(spin, level) * pow_rational(field.abs(), st);
}

Rational gamma_coefficient(const SpinValue& spin, const LevelSpec& level) {
  require_sigma_ge_one(level, "gamma");
  const long ts = spin.twice();
  const long st = level.sigma_twice();
  // (2S+1)^2 (sigma+1) / (2 (2sigma-1)^2 (2sigma+1)^2)
  Rational num = Rational(BigInt(ts + 1) * (ts + 1)) * Rational(st + 2, 2);
  Rational den = Rational(2) * (BigInt(st - 1) * (st - 1)) *
                 (BigInt(st + 1) * (st + 1));
  return num / den;
}

Rational corrected_gap_exact(const SpinValue& spin, const LevelSpec& level,
                             const FieldValue& field) {
  const Rational b2 = field.exact() * field.exact();
  if (level.is_sigma_half()) {
    const long ts = spin.twice();
    // (S+1/2) B [1 - (1/16)(S+3/2)(S-1/2) B^2]
    Rational correction = Rational(BigInt(ts + 3) * (ts - 1), 64) * b2;
    return Rational(ts + 1, 2) * field.abs() * (1 - correction);
  }
  return leading_gap_exact(spin, level, field) *
         (1 - gamma_coefficient(spin, level) * b2);
}

Rational xi1_coefficient(const SpinValue& spin, const LevelSpec& level) {
  require_sigma_ge_one(level, "xi1");
  const long ts = spin.twice();
  const long n = level.n();
  const long st = level.sigma_twice();
  // -[n^2 - 2Sn + S(2S+1)] / ((2S-2n)((2S-2n)^2 - 1)) * H_{2S-2n-1}
  Rational bracket = Rational(BigInt(n) * n - BigInt(ts) * n) +
                     Rational(BigInt(ts) * (ts + 1), 2);
  Rational denom(BigInt(st) * (BigInt(st) * st - 1));
  return -bracket / denom * harmonic_number(st - 1);
}

Rational xi2_coefficient(const SpinValue& spin, const LevelSpec& level) {
  require_sigma_ge_one(level, "xi2");
  const long ts = spin.twice();
  const long n = level.n();
  const long st = level.sigma_twice();
  Rational first(BigInt(n + 1) * (ts - n), BigInt(st - 1) * (st - 1));
  Rational second(BigInt(n) * (ts - n + 1), BigInt(st + 1) * (st + 1));
  first.canonicalize();
  second.canonicalize();
  return Rational(-1, 4) * (first + second);
}

Rational xi3_ground_coefficient(const SpinValue& spin) {
  const long ts = spin.twice();
  // sigma = S: alpha_{S-k} = -k(2S-k); V^2 coefficient of B^2 at the
  // (S-k, S-k+1) link is R/16 with R = 4S(S+1) - 4m(m-1), m = S-k+1.
  Rational sum = 0;
  for (long k = 2; k <= ts - 1; ++k) {
    const long tm = ts - 2 * k + 2;  // 2m
    const BigInt radicand =
        BigInt(ts) * (ts + 2) - BigInt(tm) * (tm - 2);
    Rational term(radicand,
                  BigInt(16) * k * (k - 1) * (ts - k) * (ts - k + 1));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

XiIdentityReport xi_identity_report(const SpinValue& spin) {
  if (spin.twice() < 2) {
    fail(ErrorKind::InvalidLevel,
         "the xi identity needs sigma = S >= 1, got S = " + spin.str());
  }
  const LevelSpec ground(spin, 0);
  XiIdentityReport report;
  report.lhs = xi1_coefficient(spin, ground) + xi2_coefficient(spin, ground) +
               xi3_ground_coefficient(spin);
  report.rhs = -gamma_coefficient(spin, ground);
  report.holds = report.lhs == report.rhs;
  return report;
}

Rational de_form_coefficient(const SpinValue& spin, const LevelSpec& level) {
  require_sigma_ge_one(level, "the de-form coefficient");
  const long ts = spin.twice();
  const long n = level.n();
  const long st = level.sigma_twice();
  // 2 (1/2)^{2 sigma} (sigma + S)! / ((S - sigma)! ((2 sigma - 1)!)^2)
  Rational coeff = Rational(2) * pow_rational(Rational(1, 2), st);
  coeff *= Rational(factorial(ts - n));
  coeff /= factorial(n);
  const BigInt f = factorial(st - 1);
  coeff /= f * f;
  return coeff;
}

Rational ground_form_coefficient(const SpinValue& spin) {
  const long ts = spin.twice();
  if (ts < 2) {
    fail(ErrorKind::InvalidLevel, "the ground-gap form needs S > 1/2");
  }
  // S^2 / (2^{2S-3} (2S)!)
  return Rational(BigInt(ts) * ts, 4) * pow2(3 - ts) / Rational(factorial(ts));
}

namespace {

GapResult rational_gap_result(const SpinValue& spin, const LevelSpec& level,
                              const FieldValue& field, Method method,
                              const Rational& exact_value,
                              const PrecisionPolicy& policy,
                              std::map<std::string, std::string> diagnostics) {
  if (field.is_zero()) {
    fail(ErrorKind::InvalidField, "field must be nonzero");
  }
  const int digits = required_digits(spin, field, level, policy);
  return make_gap_result(spin, level, field, method, Anisotropy::easy_axis,
                         Real::of(exact_value, digits), digits,
                         std::move(diagnostics));
}

}  // namespace

GapResult leading_gap(const SpinValue& spin, const LevelSpec& level,
                      const FieldValue& field, const PrecisionPolicy& policy) {
  return rational_gap_result(spin, level, field, Method::leading,
                             leading_gap_exact(spin, level, field), policy, {});
}

GapResult corrected_gap(const SpinValue& spin, const LevelSpec& level,
                        const FieldValue& field,
                        const PrecisionPolicy& policy) {
  std::map<std::string, std::string> diagnostics;
  const Rational b2 = field.exact() * field.exact();
  if (!level.is_sigma_half()) {
    const Rational gamma = gamma_coefficient(spin, level);
    diagnostics["gamma"] = gamma.get_str();
    if (gamma * b2 >= Rational(1, 2)) {
      diagnostics["correction_regime_exceeded"] = "true";
    }
  } else if (Rational(BigInt(spin.twice() + 3) * (spin.twice() - 1), 64) * b2 >=
             Rational(1, 2)) {
    diagnostics["correction_regime_exceeded"] = "true";
  }
  return rational_gap_result(spin, level, field, Method::corrected,
                             corrected_gap_exact(spin, level, field), policy,
                             std::move(diagnostics));
}

}  // namespace spingap
