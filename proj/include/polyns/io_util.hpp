#pragma once

#include <string>

namespace polyns {

/// Writes a whole file via a temporary in the same directory plus rename, so
/// readers never observe a half-written file.
void write_text_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);  // DataError when absent

}  // namespace polyns
