#pragma once

namespace fuzztop {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace fuzztop
