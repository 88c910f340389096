#pragma once

namespace mupart {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mupart
