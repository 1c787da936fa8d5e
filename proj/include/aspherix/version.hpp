#pragma once

namespace aspherix {

inline constexpr char const* kToolName = "aspherix";
inline constexpr char const* kVersion = "0.1.0";

}  // namespace aspherix
