#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace logcy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUnsupported = 3;

struct RunResult {
  int exit_code = kExitOk;
  /// JSON report (or help text), newline-terminated
  std::string output;
};

struct RunOptions {
  /// relative input paths resolve against this directory
  std::filesystem::path base = std::filesystem::current_path();
  /// 0 reads LOGCY_WORKERS
  unsigned workers = 0;
};

/// Runs one command line (without the program name). Never throws; failures
/// become an error report with the matching exit code.
RunResult run(const std::vector<std::string>& args, const RunOptions& options = {});

/// LOGCY_WORKERS, clamped to 1..64; 1 when unset or unparsable.
unsigned workers_from_env();

std::string sha256_hex(const std::string& data);

}  // namespace logcy::cli
