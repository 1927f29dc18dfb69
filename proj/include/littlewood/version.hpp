#pragma once

namespace littlewood {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace littlewood
