#pragma once

namespace ramseyforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ramseyforge
