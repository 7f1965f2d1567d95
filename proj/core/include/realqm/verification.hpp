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

#ifndef REALQM_VERIFICATION_HPP_
#define REALQM_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "realqm/dense.hpp"

// Differential verification of the real formulation against the complex
// oracle, plus the structural identities of the construction.  Each check is
// seeded independently of the others (check seed = suite seed XOR a hash of
// the check name), so running a subset reproduces the full-suite numbers.

namespace rqm {

struct CheckResult {
  std::string name;
  double computed;
  double reference;
  std::string reference_source;
  double max_residual;
  bool pass;
};

struct VerifyOptions {
  int trials = 200;
  std::uint64_t seed = 1;
  double tolerance = kTol;
  std::vector<std::string> checks;  // empty runs everything
};

std::vector<std::string> verification_check_names();

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rqm

#endif  // REALQM_VERIFICATION_HPP_
