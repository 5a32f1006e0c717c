#pragma once

#include <filesystem>
#include <string>

namespace singcbf {

/// Writes `content` to `path` via a temp file in the same directory plus
/// an atomic rename, so a killed process never leaves a truncated file at
/// the final path. Creates parent directories on demand.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace singcbf
