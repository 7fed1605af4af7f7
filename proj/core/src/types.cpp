#include "spingap/types.hpp"

#include <cctype>

namespace spingap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long to_long(std::string_view s) {
  long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > 1000000) return -1;  // spins this large are rejected anyway
  }
  return v;
}

}  // namespace

SpinValue SpinValue::parse(std::string_view text) {
  const auto bad = [&]() -> SpinValue {
    fail(ErrorKind::InvalidSpin, "not a positive half-integer spin: '" +
                                     std::string(text) + "'");
  };
  if (text.empty()) return bad();
  if (text[0] == '-') return bad();

  long twice = -1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    // "p/2" (or "p/1") with integer p
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return bad();
    const long p = to_long(num);
    if (p < 0) return bad();
    if (den == "2") {
      twice = p;
    } else if (den == "1") {
      twice = 2 * p;
    } else {
      return bad();
    }
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    // decimal ending in .0 or .5
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || frac.size() != 1) return bad();
    const long w = to_long(whole);
    if (w < 0) return bad();
    if (frac == "0") {
      twice = 2 * w;
    } else if (frac == "5") {
      twice = 2 * w + 1;
    } else {
      return bad();
    }
  } else {
    if (!all_digits(text)) return bad();
    const long w = to_long(text);
    if (w < 0) return bad();
    twice = 2 * w;
  }
  if (twice < 1) return bad();
  return SpinValue(static_cast<int>(twice));
}

SpinValue SpinValue::from_twice(int twice_s) {
  if (twice_s < 1) {
    fail(ErrorKind::InvalidSpin, "2S must be >= 1, got " + std::to_string(twice_s));
  }
  return SpinValue(twice_s);
}

std::string SpinValue::str() const {
  if (integral()) return std::to_string(twice_s_ / 2);
  return std::to_string(twice_s_) + "/2";
}

FieldValue FieldValue::parse(std::string_view text) {
  Rational v = rational_from_decimal(text);
  return FieldValue(v, decimal_from_rational(v));
}

FieldValue FieldValue::from_rational(const Rational& value) {
  return FieldValue(value, decimal_from_rational(value));
}

LevelSpec::LevelSpec(const SpinValue& spin, int n) : n_(n) {
  const int count = spin.doublet_count();
  if (n < 0 || n >= count) {
    fail(ErrorKind::InvalidLevel,
         "level " + std::to_string(n) + " out of range for S = " + spin.str() +
             " (doublets 0.." + std::to_string(count - 1) + ")");
  }
  sigma_twice_ = spin.twice() - 2 * n;
}

PrecisionPolicy PrecisionPolicy::parse(std::string_view text) {
  if (text == "auto") return automatic();
  constexpr std::string_view prefix = "digits:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto num = text.substr(prefix.size());
    if (!num.empty()) {
      long digits = 0;
      bool ok = true;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          ok = false;
          break;
        }
        digits = digits * 10 + (c - '0');
        if (digits > 1000000) {
          ok = false;
          break;
        }
      }
      if (ok && digits >= 1) return fixed(static_cast<int>(digits));
    }
  }
  fail(ErrorKind::InvalidConfig,
       "precision must be 'auto' or 'digits:N', got '" + std::string(text) + "'");
}

std::string PrecisionPolicy::str() const {
  if (mode == Mode::Auto) return "auto";
  return "digits:" + std::to_string(digits);
}

Anisotropy anisotropy_from_string(std::string_view text) {
  if (text == "easy-axis" || text == "easy_axis") return Anisotropy::easy_axis;
  if (text == "easy-plane" || text == "easy_plane") return Anisotropy::easy_plane;
  fail(ErrorKind::InvalidConfig,
       "anisotropy must be easy-axis or easy-plane, got '" + std::string(text) + "'");
}

std::string_view to_string(Anisotropy kind) {
  return kind == Anisotropy::easy_axis ? "easy-axis" : "easy-plane";
}

Method method_from_string(std::string_view text) {
  if (text == "exact") return Method::exact;
  if (text == "leading") return Method::leading;
  if (text == "corrected") return Method::corrected;
  if (text == "bw") return Method::bw;
  fail(ErrorKind::InvalidConfig,
       "method must be exact, leading, corrected or bw, got '" + std::string(text) + "'");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::exact: return "exact";
    case Method::leading: return "leading";
    case Method::corrected: return "corrected";
    case Method::bw: return "bw";
  }
  return "?";
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::exact, Method::leading,
                                           Method::corrected, Method::bw};
  return methods;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpin: return "InvalidSpin";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidLevel: return "InvalidLevel";
    case ErrorKind::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::DoubletBroken: return "DoubletBroken";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
  }
  return "Error";
}

GapResult make_gap_result(const SpinValue& spin, const LevelSpec& level,
                          const FieldValue& field, Method method,
                          Anisotropy anisotropy, Real numeric, int digits_used,
                          std::map<std::string, std::string> diagnostics) {
  Real magnitude = numeric.abs();
  std::string value = magnitude.str(digits_used);
  return GapResult{spin,          level,      field,
                   method,        anisotropy, std::move(value),
                   std::move(magnitude), digits_used, std::move(diagnostics)};
}

}  // namespace spingap
