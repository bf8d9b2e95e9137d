#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tripsys/enumerate.hpp"
#include "tripsys/patterns.hpp"

namespace tripsys::cli {

enum class Command { kFamily, kEnumerate, kHierarchy, kVerify, kIso, kExport };
enum class Format { kText, kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitInternal = 4;

// Environment variable naming the directory that relative output paths are resolved against.
inline constexpr const char* kOutputDirEnv = "TRIPSYS_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::kVerify;
  std::string family;  // family command
  int n_min = 0;
  int n_max = 0;
  std::vector<Pattern> forbidden;
  std::optional<Engine> engine;  // default: clique for {M2}, mis otherwise
  Format format = Format::kText;
  std::string output;  // file (directory for export); empty writes to stdout
  int threads = 1;
  bool deterministic = false;  // forces a single worker
  bool labeled_counts = false;
  bool labeled_containment = false;
  bool allow_large = false;
  bool embed = false;              // iso: test embedding of the first file into the second
  std::vector<std::string> files;  // iso inputs
};

// Parses argv. On failure writes a message to err and returns nullopt with exit_code set.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

// Parses "7" or "6..9".
std::pair<int, int> parse_n_range(const std::string& text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tripsys::cli
