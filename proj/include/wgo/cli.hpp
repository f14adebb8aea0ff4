#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wgo {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitInvalid = 2, kExitNotFound = 3, kExitCapacity = 4 };

struct JobSpec {
  std::string command;
  std::optional<int> k, n;
  // Positional arguments: weight vectors as JSON arrays, or 0/1 words for puzzles.
  std::vector<std::string> args;
  std::vector<std::string> primes;
  std::string scope = "full";
  std::string format = "json";
  std::string output;
  bool equivariant = false;
  bool ordinary = false;
  bool list = false;
  bool check_oracle = false;
  int jobs = 0;  // 0 picks the number of logical cores
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // what goes to stdout or the output file
  std::string error;   // diagnostic for stderr
};

// Unique (k, n) with 2 <= k and 2k <= n whose symbol count is `length`.
std::optional<std::pair<int, int>> infer_shape(std::size_t length);

CommandResult run_job(const JobSpec& job);

const std::vector<std::string>& command_names();

}  // namespace wgo
