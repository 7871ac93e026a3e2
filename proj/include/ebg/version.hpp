#pragma once

namespace ebg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ebg
