#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewinv/group.hpp"
#include "skewinv/pipeline.hpp"
#include "skewinv/problem.hpp"

namespace skewinv {

inline constexpr std::array<std::string_view, 8> kCommands = {
    "group", "invariants", "molien", "noether", "gansub", "arrangement", "transfer", "examples"};

struct RunOptions {
  Method method = Method::direct;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;
  std::size_t group_cap = kDefaultGroupCap;
};

struct Report {
  std::string command;
  /// Machine-readable document; identical inputs give identical bytes.
  std::string json;
  /// Table view of the same data.
  std::string text;
  /// False when any asserted flag failed.
  bool ok = true;
};

/// Runs one command.  `problem` may be null for "examples" and for
/// "arrangement" (which then runs the seeded random battery).
/// Throws UsageError for unknown commands or a missing problem file.
Report run(std::string_view command, const ProblemFile* problem, const RunOptions& options);

struct BuiltinResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// swap, sign line, two copies of the sign line, and the skew swap example.
std::vector<BuiltinResult> run_builtin_examples();

}  // namespace skewinv
