#pragma once

#include <string>

namespace polyns {

inline constexpr const char* library_name = "polyns";
inline constexpr const char* library_version = "1.0.0";

/// One-line toolchain description recorded in run summaries.
std::string build_info();

}  // namespace polyns
