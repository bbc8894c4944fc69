#pragma once

namespace bicomm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bicomm
