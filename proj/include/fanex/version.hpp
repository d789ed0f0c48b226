#pragma once

namespace fanex {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fanex
