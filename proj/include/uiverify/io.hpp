#pragma once

#include <string>

namespace uiverify {

/// Reads a whole file as UTF-8 text. Throws IoError if unreadable.
std::string read_file(const std::string& path);

/// Writes text to a file, replacing any previous content. Throws IoError on failure.
void write_file(const std::string& path, const std::string& content);

} // namespace uiverify
