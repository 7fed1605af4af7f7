#pragma once

#include <utility>
#include <vector>

#include "spingap/types.hpp"

namespace spingap {

enum class ParityLabel { full, even, odd };

std::string_view to_string(ParityLabel label);

/// Real symmetric tridiagonal matrix at a stated decimal precision.
/// Only one off-diagonal is stored; symmetry is by construction.
struct TridiagonalSystem {
  int dim = 0;
  std::vector<Real> diag;     // length dim
  std::vector<Real> offdiag;  // length dim - 1
  ParityLabel parity = ParityLabel::full;
  int digits = 0;

  /// max_i(|d_i| + |e_{i-1}| + |e_i|), floored at 1; the magnitude scale
  /// used for Gershgorin seeding and the zero-pivot perturbation.
  Real scale;
  Real gersh_lo;  // min_i(d_i - r_i)
  Real gersh_hi;  // max_i(d_i + r_i)

  /// Recomputes scale and the Gershgorin interval from the entries.
  void finalize();
};

/// <m-1|S_x|m> = sqrt(S(S+1) - m(m-1)) / 2, evaluated from the exact
/// integer radicand 4S(S+1) - 4m(m-1) with a single square root.
/// m is passed as 2m; valid range -S+1 <= m <= S.
Real sx_offdiag(const SpinValue& spin, int m_twice, int digits);

/// H = -+ S_z^2 - B S_x in the S_z basis ordered m = S, S-1, ..., -S.
/// diag[i] = -+ (S-i)^2 per anisotropy; offdiag[i] = -B <m-1|S_x|m>.
TridiagonalSystem build_full(const SpinValue& spin, const FieldValue& field,
                             Anisotropy kind, int digits);

/// Blocks of H in the reflection basis (|m> ± |-m>)/sqrt(2), ordered by
/// descending |m|. Integer S: even block has dim S+1 (contains |0>, with
/// the adjacent coupling scaled by sqrt(2)), odd block dim S. Half-integer
/// S: both blocks have dim S+1/2 and acquire a diagonal shift
/// -+ B(S+1/2)/2 at |m| = 1/2 (minus in even, plus in odd). The union of
/// the block spectra is the full spectrum.
std::pair<TridiagonalSystem, TridiagonalSystem> build_parity_blocks(
    const SpinValue& spin, const FieldValue& field, Anisotropy kind,
    int digits);

/// Exact trace: -+ S(S+1)(2S+1)/3 (S_x is traceless).
Rational trace_exact(const SpinValue& spin, Anisotropy kind);

}  // namespace spingap
