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

#ifndef REALQM_RANDOM_HPP_
#define REALQM_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "realqm/complexqm.hpp"
#include "realqm/dense.hpp"
#include "realqm/shape.hpp"

namespace rqm {

/// Seeded source of random test objects.
///
/// Every draw reduces to mt19937_64 output mapped through arithmetic and
/// square roots only (no libm transcendentals, no std distributions), so a
/// given seed yields bit-identical sequences on any conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform();

  /// Uniform in [-1, 1).
  double uniform_symmetric();

  /// Uniform integer in [lo, hi] by rejection.
  int uniform_int(int lo, int hi);

  cx complex_entry();

  ComplexVector vector(std::size_t dim);
  ComplexState state(const SystemShape& shape);

  ComplexOperator general(const SystemShape& shape);
  ComplexOperator hermitian(const SystemShape& shape);
  ComplexOperator unitary(const SystemShape& shape);
  ComplexOperator density(const SystemShape& shape);
  /// Rank-r projector from the first r columns of a random unitary.
  ComplexOperator projector(const SystemShape& shape, std::size_t rank);

  /// A dims-up-to-3, parties-up-to-max_parties shape.
  SystemShape shape(int max_parties = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rqm

#endif  // REALQM_RANDOM_HPP_
