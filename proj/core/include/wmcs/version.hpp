#pragma once

namespace wmcs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wmcs
