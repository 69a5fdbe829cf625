#pragma once

namespace pnmax {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "pnmax";

}  // namespace pnmax
