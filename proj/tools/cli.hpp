#pragma once

// Command-line surface: configuration, subcommand dispatch, and
// deterministic JSON/CSV serialization of every core operation.

#include <cstdint>
#include <string>
#include <vector>

namespace capcone::cli {

struct Config {
  int default_n = 9;
  long long default_max_m = 3;
  long long default_max_a0 = 30;
  std::string default_strategy = "random";
  std::uint64_t seed = 0;
  std::string format = "json";
};

// Flat key=value text; '#' starts a comment.  Keys: n, max_m, max_a0,
// strategy, seed, format.  Unknown keys are rejected.
Config parse_config_text(const std::string& text);

// $CAPCONE_CONFIG if set, else ./capcone.cfg if present, else defaults.
Config load_default_config();

struct CommandResult {
  // 0 success, 1 mathematical error (wall incidence, sign constraint, ...),
  // 2 usage error.
  int exit_code = 0;
  std::string payload;  // JSON, CSV or plain text; error message when != 0
};

// Dispatches one invocation; argv excludes the program name.  Identical
// argv + seed produce byte-identical payloads.
CommandResult run(const std::vector<std::string>& argv, const Config& config);

}  // namespace capcone::cli
