#pragma once

#include "spingap/types.hpp"

namespace spingap {

/// Smallest working precision ever used for matrix computations.
inline constexpr int kDigitsFloor = 40;

/// Decimal digits needed to resolve the predicted splitting. In Auto mode:
/// max(40, ceil(-log10(leading gap)) + ceil(log10(max |eps_m|)) + guard),
/// where the gap estimate is the leading-order analytic term and
/// max |eps_m| = S^2. Fixed mode returns the policy's digit count.
int required_digits(const SpinValue& spin, const FieldValue& field,
                    const LevelSpec& level, const PrecisionPolicy& policy);

}  // namespace spingap
