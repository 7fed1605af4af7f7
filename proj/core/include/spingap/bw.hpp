#pragma once

#include "spingap/precision.hpp"
#include "spingap/types.hpp"

namespace spingap {

/// Resummed Brillouin-Wigner secular equation for one doublet:
///   L(E) = E - eps_sigma - sum V^2_{sigma,m}/(E - eps_m) = ± g_sigma(E)
/// with m ranging over sigma±1 (the degenerate partner -sigma is excluded;
/// it is what the resummation produced on the right) and
///   g_sigma(E) = prod_{k=0}^{2s-1} V_{s-k,s-k-1} / prod_{k=1}^{2s-1} (E - eps_{s-k}).
/// The left side is truncated at the displayed second-order terms.
struct BwEquation {
  SpinValue spin;
  LevelSpec level;
  FieldValue field;
  int truncation = 2;
  int digits = 0;
  long max_iterations = 10000;
};

enum class BwBranch { plus, minus };

struct BwSolveStats {
  long iterations = 0;
  bool used_bisection = false;
};

/// Root of L(E) = sign * g(E) inside (eps_sigma - 1/2, eps_sigma + 1/2),
/// by damped fixed-point iteration E <- eps_sigma + Sigma(E) ± g(E) with a
/// scan-and-bisect fallback. Converged when successive iterates differ by
/// <= tol * max(1, |E|). Requires tol >= 10^(5-digits).
Real solve_branch(const BwEquation& eq, BwBranch branch, const Real& tol,
                  BwSolveStats* stats = nullptr);

/// |E_plus - E_minus|. A zero tolerance selects the default
/// max(10^(5-digits), gap_estimate * 1e-12).
GapResult bw_gap(const SpinValue& spin, const LevelSpec& level,
                 const FieldValue& field, const Rational& tol,
                 const PrecisionPolicy& policy);

}  // namespace spingap
