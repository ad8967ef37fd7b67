#pragma once

namespace tofe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tofe
