#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spingap/compute.hpp"
#include "spingap/spectrum.hpp"

namespace spingap {

enum class Spacing { log, linear };

Spacing spacing_from_string(std::string_view text);
std::string_view to_string(Spacing spacing);

struct SweepConfig {
  SpinValue spin = SpinValue::from_twice(2);
  std::vector<int> levels;  // empty = all doublets
  FieldValue field_min = FieldValue::parse("0.01");
  FieldValue field_max = FieldValue::parse("0.1");
  int points = 2;
  Spacing spacing = Spacing::log;
  std::vector<Method> methods{Method::exact};
  Anisotropy anisotropy = Anisotropy::easy_axis;
  PrecisionPolicy policy = PrecisionPolicy::automatic();

  void validate() const;
  std::vector<int> resolved_levels() const;
};

/// Field grid between the exact endpoints. Interior points are rounded to
/// 25 significant decimal digits so every value stays an exact decimal
/// rational; endpoints are kept bit-exact.
std::vector<FieldValue> field_grid(const FieldValue& field_min,
                                   const FieldValue& field_max, int points,
                                   Spacing spacing);

struct MethodOutcome {
  std::string value;    // decimal string, empty on error
  std::string rel_dev;  // |value/exact - 1|, set when exact is present
  std::string status = "ok";
};

/// One (level, field) evaluation across the requested methods.
struct ComparisonRow {
  std::string spin;
  int n = 0;
  std::string B;
  std::vector<std::pair<Method, MethodOutcome>> outcomes;  // canonical order
  int digits_used = 0;
  long elapsed_ms = 0;

  const MethodOutcome* outcome(Method m) const;
  std::string status() const;  // "ok" or joined per-method failures
};

/// Level-major, field-ascending evaluation; failed methods are recorded in
/// the row rather than aborting the sweep.
std::vector<ComparisonRow> run_sweep(const SweepConfig& config);

/// Rows for a single field point (the `compare` command).
std::vector<ComparisonRow> run_point(const SweepConfig& config,
                                     const FieldValue& field);

/// Fixed-column CSV rendering, one line per (row, method):
/// spin,n,B,method,gap,rel_dev_vs_exact,digits,status,elapsed_ms.
std::string rows_to_csv(const std::vector<ComparisonRow>& rows);

struct FitResult {
  double slope = 0;
  double intercept = 0;  // log10 units
  double rms = 0;
};

/// Least-squares slope of log(value) vs log(B). Needs >= 3 positive
/// values; throws DegenerateFit otherwise.
FitResult fit_exponent(const std::vector<std::pair<Rational, Real>>& points);

enum class FitColumn { gap, residual };

/// Extracts (B, gap) or (B, |method/exact - 1|) pairs from sweep rows for
/// one level and fits the exponent.
FitResult fit_rows(const std::vector<ComparisonRow>& rows, Method method,
                   FitColumn column, int level_n);

struct DoubletRow {
  int n = 0;
  Real lower;
  Real upper;
  Real gap;
  bool intact = false;  // members adjacent in the merged spectrum
};

struct SpectrumReport {
  EigenvalueSet spectrum;
  std::vector<DoubletRow> doublets;
  std::optional<int> singlet_index;  // merged-spectrum position, integer S
  int digits = 0;
};

SpectrumReport spectrum_report(const SpinValue& spin, const FieldValue& field,
                               Anisotropy kind, const PrecisionPolicy& policy);

}  // namespace spingap
