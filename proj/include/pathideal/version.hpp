#pragma once

namespace pathideal {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pathideal
