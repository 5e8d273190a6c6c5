#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutDirVariable = "GRM_OUT_DIR";

/// Full command-line entry point. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes to a sibling temp file, then renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace grm::cli
