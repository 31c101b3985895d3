#pragma once

#include <string>
#include <vector>

namespace riskpipe {

// Writes via a temporary file in the same directory, then renames.
void atomic_write_file(const std::string& path, const std::string& bytes);

std::string read_file(const std::string& path);

// Non-empty, non-comment lines, stripped of trailing CR and surrounding
// whitespace. '#' starts a comment line.
std::vector<std::string> read_lines(const std::string& path);

// Bundled lexical data. RISKPIPE_DATA overrides the compiled-in default.
std::string default_data_dir();

}  // namespace riskpipe
