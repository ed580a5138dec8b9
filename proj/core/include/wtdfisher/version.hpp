#pragma once

namespace wtdfisher {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wtdfisher
