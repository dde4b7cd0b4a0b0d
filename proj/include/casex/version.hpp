#pragma once

namespace casex {

inline constexpr const char* kToolName = "casex";
inline constexpr const char* kVersion = "0.1.0";

} // namespace casex
