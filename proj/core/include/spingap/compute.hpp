#pragma once

#include "spingap/types.hpp"

namespace spingap {

/// Easy-plane gaps are the easy-axis gaps renumbered: doublet n of one
/// spectrum corresponds to doublet count-1-n of the other.
int equivalent_easy_axis_level(const SpinValue& spin, int n);

/// Dispatches to the exact, leading, corrected or Brillouin-Wigner path.
/// For easy-plane anisotropy the analytic and BW methods evaluate at the
/// equivalent easy-axis index; the exact path diagonalizes the actual
/// easy-plane Hamiltonian.
GapResult compute_gap(const SpinValue& spin, int level_n,
                      const FieldValue& field, Method method, Anisotropy kind,
                      const PrecisionPolicy& policy);

}  // namespace spingap
