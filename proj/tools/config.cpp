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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace rqm::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_u64(const std::string& value, int line, const char* field) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    fail(line, std::string(field) + " must be an unsigned integer");
  return out;
}

double parse_double(const std::string& value, int line, const char* field) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    fail(line, std::string(field) + " must be a number");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::bellswap:
      return "bellswap";
    case Command::map_state:
      return "map-state";
    case Command::map_operator:
      return "map-operator";
    case Command::verify:
      return "verify";
  }
  return "?";
}

const char* backend_choice_name(BackendChoice b) {
  switch (b) {
    case BackendChoice::complex_qm:
      return "complex";
    case BackendChoice::real_qm:
      return "real";
    case BackendChoice::both:
      return "both";
  }
  return "?";
}

Command parse_command_name(const std::string& text) {
  if (text == "bellswap") return Command::bellswap;
  if (text == "map-state") return Command::map_state;
  if (text == "map-operator") return Command::map_operator;
  if (text == "verify") return Command::verify;
  throw ConfigError("unknown command '" + text + "'");
}

BackendChoice parse_backend_name(const std::string& text) {
  if (text == "complex") return BackendChoice::complex_qm;
  if (text == "real") return BackendChoice::real_qm;
  if (text == "both") return BackendChoice::both;
  throw ConfigError("unknown backend '" + text + "' (expected complex, real or both)");
}

RunConfig parse_config(const std::string& text, RunConfig config) {
  std::stringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for '" + key + "'");

    if (key == "command") {
      try {
        config.command = parse_command_name(value);
      } catch (const ConfigError& e) {
        fail(line, e.what());
      }
    } else if (key == "backend") {
      try {
        config.backend = parse_backend_name(value);
      } catch (const ConfigError& e) {
        fail(line, e.what());
      }
    } else if (key == "in") {
      config.input_path = value;
    } else if (key == "out") {
      config.output_path = value;
    } else if (key == "seed") {
      config.seed = parse_u64(value, line, "seed");
    } else if (key == "trials") {
      const std::uint64_t trials = parse_u64(value, line, "trials");
      if (trials < 1) fail(line, "trials must be at least 1");
      if (trials > 1000000) fail(line, "trials is unreasonably large");
      config.trials = static_cast<int>(trials);
    } else if (key == "tolerance") {
      const double tol = parse_double(value, line, "tolerance");
      if (!(tol > 0)) fail(line, "tolerance must be positive");
      config.tolerance = tol;
    } else if (key == "checks") {
      config.checks = split_list(value);
      if (config.checks.empty()) fail(line, "checks list is empty");
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  return config;
}

void validate_config(const RunConfig& config) {
  if (!config.command) throw ConfigError("missing required key 'command'");
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (!(config.tolerance > 0)) throw ConfigError("tolerance must be positive");
  const Command c = *config.command;
  if ((c == Command::map_state || c == Command::map_operator)) {
    if (config.input_path.empty())
      throw ConfigError(std::string(command_name(c)) + " requires an input path ('in')");
    if (config.output_path.empty())
      throw ConfigError(std::string(command_name(c)) + " requires an output path ('out')");
  }
}

}  // namespace rqm::cli
