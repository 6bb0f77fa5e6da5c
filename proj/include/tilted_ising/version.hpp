#pragma once

namespace tilted_ising {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tilted_ising
