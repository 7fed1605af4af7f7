#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spingap/errors.hpp"
#include "spingap/rational.hpp"
#include "spingap/real.hpp"

namespace spingap {

/// Half-integer spin stored exactly as 2S. S = 0 is rejected: it has a
/// single level and no gap.
class SpinValue {
 public:
  static SpinValue parse(std::string_view text);
  static SpinValue from_twice(int twice_s);

  int twice() const { return twice_s_; }
  bool integral() const { return twice_s_ % 2 == 0; }
  int dimension() const { return twice_s_ + 1; }
  /// Number of tunnelling doublets: S for integer S, S + 1/2 otherwise.
  int doublet_count() const { return (twice_s_ + 1) / 2; }
  Rational value() const { return Rational(twice_s_, 2); }
  /// Canonical text: "3" for integer spin, "5/2" for half-integer.
  std::string str() const;

  friend bool operator==(const SpinValue& a, const SpinValue& b) = default;

 private:
  explicit SpinValue(int twice_s) : twice_s_(twice_s) {}
  int twice_s_ = 1;
};

/// Magnetic field in the Hamiltonian's dimensionless units, held as an
/// exact rational parsed from a decimal string (denominator divides a
/// power of ten). Conversion to a working-precision float is a single
/// deterministic rounding.
class FieldValue {
 public:
  static FieldValue parse(std::string_view text);
  static FieldValue from_rational(const Rational& value);

  const Rational& exact() const { return value_; }
  Rational abs() const { return value_ < 0 ? Rational(-value_) : value_; }
  bool is_zero() const { return value_ == 0; }
  int sign() const { return sgn(value_); }
  const std::string& str() const { return text_; }
  Real to_real(int digits) const { return Real::of(value_, digits); }

  friend bool operator==(const FieldValue& a, const FieldValue& b) {
    return a.value_ == b.value_;
  }

 private:
  FieldValue(Rational value, std::string text)
      : value_(std::move(value)), text_(std::move(text)) {}
  Rational value_;
  std::string text_;  // canonical positional decimal
};

/// Doublet index n, counted from the ground doublet (n = 0). The partner
/// quantum number is sigma = S - n; sigma >= 1 selects the generic gap
/// formula, sigma = 1/2 the half-integer highest-gap formula.
class LevelSpec {
 public:
  LevelSpec(const SpinValue& spin, int n);

  int n() const { return n_; }
  int sigma_twice() const { return sigma_twice_; }
  bool is_sigma_half() const { return sigma_twice_ == 1; }
  /// epsilon_sigma = -sigma^2, the unperturbed doublet energy.
  Rational unperturbed_energy() const {
    return Rational(-BigInt(sigma_twice_) * sigma_twice_, 4);
  }

 private:
  int n_;
  int sigma_twice_;
};

struct PrecisionPolicy {
  enum class Mode { Auto, Fixed };

  Mode mode = Mode::Auto;
  int digits = 0;        // used in Fixed mode
  int guard_digits = 20;

  static PrecisionPolicy automatic(int guard_digits = 20) {
    return PrecisionPolicy{Mode::Auto, 0, guard_digits};
  }
  static PrecisionPolicy fixed(int digits) {
    return PrecisionPolicy{Mode::Fixed, digits, 20};
  }
  /// "auto" or "digits:N".
  static PrecisionPolicy parse(std::string_view text);
  std::string str() const;
};

enum class Anisotropy { easy_axis, easy_plane };

Anisotropy anisotropy_from_string(std::string_view text);
std::string_view to_string(Anisotropy kind);

enum class Method { exact, leading, corrected, bw };

Method method_from_string(std::string_view text);
std::string_view to_string(Method method);

/// All gap-computing methods in canonical output order.
const std::vector<Method>& all_methods();

/// One computed splitting. `value` is the decimal rendering at
/// `digits_used` significant digits of the non-negative numeric gap.
struct GapResult {
  SpinValue spin;
  LevelSpec level;
  FieldValue field;
  Method method;
  Anisotropy anisotropy;
  std::string value;
  Real numeric;
  int digits_used = 0;
  std::map<std::string, std::string> diagnostics;
};

GapResult make_gap_result(const SpinValue& spin, const LevelSpec& level,
                          const FieldValue& field, Method method,
                          Anisotropy anisotropy, Real numeric, int digits_used,
                          std::map<std::string, std::string> diagnostics = {});

}  // namespace spingap
