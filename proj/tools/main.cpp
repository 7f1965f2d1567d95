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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rqm::cli::IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rqm::cli;

  CLI::App app{"real-number quantum mechanics engine"};
  app.fallthrough();

  std::string config_path, backend_text, checks_text;
  std::string in_path, out_path;
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0;

  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--backend", backend_text, "complex, real or both");
  app.add_option("--in", in_path, "input state/operator file");
  app.add_option("--out", out_path, "output file (mapped data or report)");
  app.add_option("--seed", seed, "seed for the random property suites");
  app.add_option("--trials", trials, "trials per property suite");
  app.add_option("--tol", tolerance, "tolerance override");
  app.add_option("--checks", checks_text, "comma-separated subset of verify checks");

  auto* cmd_bellswap =
      app.add_subcommand("bellswap", "run the entanglement-swapping Bell experiment");
  auto* cmd_map_state = app.add_subcommand("map-state", "map a state between formalisms");
  auto* cmd_map_operator =
      app.add_subcommand("map-operator", "map an operator between formalisms");
  auto* cmd_verify = app.add_subcommand("verify", "run the differential verification suite");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = parse_config(read_file(config_path));

    if (cmd_bellswap->parsed()) config.command = Command::bellswap;
    if (cmd_map_state->parsed()) config.command = Command::map_state;
    if (cmd_map_operator->parsed()) config.command = Command::map_operator;
    if (cmd_verify->parsed()) config.command = Command::verify;

    if (!backend_text.empty()) config.backend = parse_backend_name(backend_text);
    if (!in_path.empty()) config.input_path = in_path;
    if (!out_path.empty()) config.output_path = out_path;
    if (app.count("--seed")) config.seed = seed;
    if (app.count("--trials")) {
      if (trials < 1) throw ConfigError("trials must be at least 1");
      config.trials = trials;
    }
    if (app.count("--tol")) {
      if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
      config.tolerance = tolerance;
    }
    if (!checks_text.empty()) config = parse_config("checks = " + checks_text, config);

    const RunOutcome outcome = run(config);
    emit_report(config, outcome.report);
    return outcome.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
