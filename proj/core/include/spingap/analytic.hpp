#pragma once

#include "spingap/types.hpp"

namespace spingap {

// Closed-form splittings in exact rational arithmetic. Every coefficient
// is a reduced fraction; floats appear only when a result is rendered.

/// Coefficient of the leading splitting: for sigma >= 1 the gap is
/// coeff * B^{2 sigma} with
///   coeff = (2S-n)! / (2^{2S-2n-1} n! ((2S-2n-1)!)^2),
/// for sigma = 1/2 it is coeff * B with coeff = S + 1/2.
Rational leading_coefficient(const SpinValue& spin, const LevelSpec& level);

Rational leading_gap_exact(const SpinValue& spin, const LevelSpec& level,
                           const FieldValue& field);

/// First-correction coefficient gamma in gap = leading * (1 - gamma B^2):
/// gamma = (2S+1)^2 (sigma+1) / (2 (2sigma-1)^2 (2sigma+1)^2).
/// Defined for sigma >= 1; the sigma = 1/2 correction lives inside the
/// highest-gap formula instead.
Rational gamma_coefficient(const SpinValue& spin, const LevelSpec& level);

Rational corrected_gap_exact(const SpinValue& spin, const LevelSpec& level,
                             const FieldValue& field);

/// B^2 coefficient of xi_1 (level-shift correction inside the amplitude
/// denominators): -[n^2 - 2Sn + S(2S+1)] / ((2S-2n)((2S-2n)^2 - 1)) *
/// H_{2S-2n-1}. Requires sigma >= 1.
Rational xi1_coefficient(const SpinValue& spin, const LevelSpec& level);

/// B^2 coefficient of xi_2 (second-order level repulsion):
/// -(1/4) [ (n+1)(2S-n)/(2S-2n-1)^2 + n(2S-n+1)/(2S-2n+1)^2 ].
Rational xi2_coefficient(const SpinValue& spin, const LevelSpec& level);

/// B^2 coefficient of xi_3 (extra to-and-fro excursions), ground doublet
/// only: sum_{k=2}^{2S-1} V^2_{S-k,S-k+1} / (alpha_{S-k} alpha_{S-k+1})
/// with alpha_{S-k} = -k(2S-k). Empty sum (S = 1) gives 0; n > 0 is
/// unsupported.
Rational xi3_ground_coefficient(const SpinValue& spin);

struct XiIdentityReport {
  bool holds = false;
  Rational lhs;  // xi1 + xi2 + xi3 coefficients
  Rational rhs;  // -gamma
};

/// Exact check that xi1 + xi2 + xi3 = -gamma for the ground doublet.
XiIdentityReport xi_identity_report(const SpinValue& spin);

/// Alternative leading-coefficient form 2 (1/2)^{2 sigma} (sigma+S)! /
/// ((S-sigma)! ((2 sigma - 1)!)^2), with the factorial squared.
Rational de_form_coefficient(const SpinValue& spin, const LevelSpec& level);

/// Ground-gap coefficient S^2 / (2^{2S-3} (2S)!).
Rational ground_form_coefficient(const SpinValue& spin);

/// Leading-order gap as a GapResult rendered at the policy precision.
GapResult leading_gap(const SpinValue& spin, const LevelSpec& level,
                      const FieldValue& field, const PrecisionPolicy& policy);

/// First-corrected gap: leading * (1 - gamma B^2) for sigma >= 1, and
/// (S+1/2) B (1 - (1/16)(S+3/2)(S-1/2) B^2) for sigma = 1/2. Sets the
/// "correction_regime_exceeded" diagnostic when gamma B^2 >= 1/2.
GapResult corrected_gap(const SpinValue& spin, const LevelSpec& level,
                        const FieldValue& field,
                        const PrecisionPolicy& policy);

}  // namespace spingap
