#pragma once

// The command-line subcommands as library calls: each builds the algebra named
// by the run configuration and produces one JSON document.

#include "hopfkit/io.hpp"

namespace hk {

struct RunConfig {
  std::string algebra, field = "p=5,root=4", out;
  bool braided = false;
  std::size_t sample = 0;  // 0: default sample
  std::uint64_t seed = 1;
};

// Inconsistent flags (as opposed to malformed specs, which raise Error::Code::Parse).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  json doc;
  bool ok = false;
};

std::vector<std::string> command_names();
// Check failures (including a refused double) give ok = false; configuration
// problems throw ConfigError or Error.
CommandResult run_command(const std::string& name, const RunConfig& cfg);

}  // namespace hk
