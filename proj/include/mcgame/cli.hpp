#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mcgame::cli {

// Stable exit codes for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string format = "json";
  std::string method = "closed_form";
  std::optional<int> max_order;
  std::string set;
  std::string point;
  std::string axioms = "all";
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  int trials = 100;
  int n = 3;
  int k = 2;
  double tolerance = 1e-9;
  bool normalize = false;
  std::optional<int> size_limit_override;
};

// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcgame::cli
