#pragma once

namespace dp2 {

inline constexpr const char* kToolkitName    = "dp2cert";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace dp2
