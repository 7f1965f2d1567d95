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

#ifndef REALQM_TOOLS_COMMANDS_HPP_
#define REALQM_TOOLS_COMMANDS_HPP_

#include "config.hpp"
#include "report.hpp"

namespace rqm::cli {

struct RunOutcome {
  int exit_code;  // 0 pass, 1 check failure (2 and 3 arrive via exceptions)
  JsonValue report;
};

/// Executes the configured command.  Throws ConfigError for invalid input and
/// IoError for filesystem trouble; check failures are reported through the
/// exit code and the report body.
RunOutcome run(const RunConfig& config);

/// Serializes the report to config.output_path, or stdout when empty.
void emit_report(const RunConfig& config, const JsonValue& report);

}  // namespace rqm::cli

#endif  // REALQM_TOOLS_COMMANDS_HPP_
