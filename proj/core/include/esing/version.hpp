#pragma once

namespace esing {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace esing
