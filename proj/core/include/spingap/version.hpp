#pragma once

#include <string_view>

namespace spingap {

inline constexpr std::string_view kToolName = "spingap";
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace spingap
