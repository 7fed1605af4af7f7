#pragma once

#include <vector>

#include "spingap/hamiltonian.hpp"
#include "spingap/precision.hpp"

namespace spingap {

/// Certified enclosure of one eigenvalue.
struct Interval {
  Real lo;
  Real hi;
  Real mid() const { return (lo + hi) / 2; }
  Real width() const { return hi - lo; }
};

struct EigenvalueSet {
  std::vector<Real> values;           // ascending
  std::vector<ParityLabel> labels;    // aligned with values
  int digits = 0;
  Real max_interval_width;            // bisection certificate
};

/// Number of eigenvalues strictly below x, by the shifted LDL sign-count
/// recurrence. A zero pivot is replaced by -tiny, tiny = 10^(-digits)*scale;
/// this fixed rule keeps counts reproducible across implementations.
int sturm_count(const TridiagonalSystem& system, const Real& x);

/// All eigenvalues, each bracketed by Sturm bisection from the Gershgorin
/// interval down to width <= target_width; reported value is the interval
/// midpoint. Throws PrecisionExhausted when target_width asks for more than
/// the working precision can certify (< 10^(2-digits)*scale).
EigenvalueSet eigenvalues(const TridiagonalSystem& system,
                          const Real& target_width);

/// Enclosure of the k-th smallest eigenvalue (k = 0-based), same contract
/// as eigenvalues() but for a single index.
Interval eigenvalue_interval(const TridiagonalSystem& system, int k,
                             const Real& target_width);

/// Both parity blocks solved and merged into one ascending labeled set.
EigenvalueSet merged_parity_spectrum(const SpinValue& spin,
                                     const FieldValue& field, Anisotropy kind,
                                     int digits, const Real& target_width);

/// Tunnelling splitting of doublet n from the parity-resolved spectrum:
/// the two members live in opposite parity blocks and are matched by
/// per-block eigenvalue index (from the spectrum top for easy-plane, where
/// the gap order is reversed). Validates that the pair is adjacent in the
/// merged spectrum and that the certificate reaches relative width 1e-10.
GapResult exact_gap(const SpinValue& spin, const FieldValue& field,
                    const LevelSpec& level, Anisotropy kind,
                    const PrecisionPolicy& policy);

}  // namespace spingap
