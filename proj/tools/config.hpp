// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALQM_TOOLS_CONFIG_HPP_
#define REALQM_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqm::cli {

/// Bad user input: unparseable or invalid config / input data.  Exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem trouble: missing, unreadable or unwritable files.  Exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { bellswap, map_state, map_operator, verify };

enum class BackendChoice { complex_qm, real_qm, both };

struct RunConfig {
  std::optional<Command> command;
  BackendChoice backend = BackendChoice::both;
  std::string input_path;
  std::string output_path;
  std::uint64_t seed = 1;
  int trials = 200;
  double tolerance = 1e-9;
  std::vector<std::string> checks;  // verify: subset of check names; empty = all
};

const char* command_name(Command c);
const char* backend_choice_name(BackendChoice b);

Command parse_command_name(const std::string& text);
BackendChoice parse_backend_name(const std::string& text);

/// Parses the flat key = value config format.  Keys: command, backend, in,
/// out, seed, trials, tolerance, checks.  `checks` is a comma-separated list;
/// '#' starts a comment.  Unknown keys and invalid values raise ConfigError
/// naming the line and field.  Values are layered on top of `base`.
RunConfig parse_config(const std::string& text, RunConfig base = RunConfig{});

/// Final validation before running (command present, ranges sane).
void validate_config(const RunConfig& config);

}  // namespace rqm::cli

#endif  // REALQM_TOOLS_CONFIG_HPP_
