#pragma once

namespace adsgp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace adsgp
