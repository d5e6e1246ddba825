#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "houe/bounds.hpp"

namespace houe::cli {

enum class Command { Unify, Prove, Houe, Correct };

struct RunConfig {
  Command command = Command::Correct;
  std::filesystem::path input;
  SearchBounds bounds;
  bool machine = false;
  bool trace = false;
};

/// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;
inline constexpr int kResourceLimit = 2;
inline constexpr int kInputError = 3;

struct RunOutput {
  int status = kSuccess;
  std::string out;
  std::string err;
};

/// Locates a problem file: the path as given, then with `.houe` appended,
/// then both forms under `seed_dir` (when non-empty).
std::filesystem::path resolve_input(const std::filesystem::path& input,
                                    const std::string& seed_dir);

/// Runs one problem and renders the report; input errors become status 3.
/// Reads HOUE_SEED_DIR for file discovery.
RunOutput run(const RunConfig& config);

/// Rule-per-line trace, each line indented by `indent` spaces.
std::string render_trace(const std::vector<std::string>& trace, int indent = 2);

}  // namespace houe::cli
