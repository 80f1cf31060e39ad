#pragma once

namespace sigtile {

inline constexpr const char* version = "1.0.0";

}  // namespace sigtile
