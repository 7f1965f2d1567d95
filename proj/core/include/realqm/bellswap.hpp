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

#ifndef REALQM_BELLSWAP_HPP_
#define REALQM_BELLSWAP_HPP_

#include <array>
#include <utility>
#include <vector>

#include "realqm/complexqm.hpp"
#include "realqm/real_physics.hpp"
#include "realqm/realmap.hpp"

// Entanglement-swapping Bell experiment.
//
// Two sources distribute bipartite states to (Alice, Bob) and (Bob, Charlie);
// Bob performs a four-outcome Bell measurement on his two qubits, Alice picks
// one of three dichotomic observables, Charlie one of six.  The experiment is
// evaluated twice: once in standard complex quantum mechanics and once purely
// in the real formulation, and the two probability tables must agree
// entrywise.  The Bell functional reaches 6*sqrt(2) on both.

namespace rqm {

enum class Backend { complex_qm, real_qm };

const char* backend_name(Backend b);

/// Full description of one experiment instance.  Validated on construction:
/// observables are Hermitian involutions, Bob's ensemble is complete and
/// orthogonal, sources are two-qubit states.
struct ExperimentSpec {
  ExperimentSpec(ComplexState source_ab, ComplexState source_bc, MeasurementEnsemble bob,
                 std::vector<ComplexOperator> alice, std::vector<ComplexOperator> charlie);

  ComplexState source_ab;  // parties A, B1
  ComplexState source_bc;  // parties B2, C
  MeasurementEnsemble bob;  // on B1 B2; outcomes 00, 01, 10, 11
  std::vector<ComplexOperator> alice;    // 3 observables on A
  std::vector<ComplexOperator> charlie;  // 6 observables on C
};

/// Both sources |phi+>, Bob's ensemble (phi+, psi+, phi-, psi-) with the
/// psi- = (|10> - |01>)/sqrt(2) convention, Alice Z/X/Y, Charlie the six
/// (+-)-combinations of pairs of Paulis over sqrt(2).
ExperimentSpec default_spec();

/// P(a,b,c|x,z) over a,c in {-1,+1}, b in {00,01,10,11}, x in 1..3, z in 1..6.
/// Indices in code are 0-based: a_idx/c_idx 0 means outcome -1, 1 means +1;
/// b is b1b2 read as a 2-bit integer; x in 0..2 and z in 0..5.
class ProbabilityTable {
 public:
  ProbabilityTable(Backend backend, std::vector<double> grid);

  double p(int a_idx, int b, int c_idx, int x, int z) const;
  /// P(b|x,z), summed over a and c.
  double p_outcome(int b, int x, int z) const;
  /// Largest deviation of P(b|x,z) from P(b|0,0) over all settings.
  double signaling_residual() const;
  Backend backend() const { return backend_; }

  static constexpr int entries = 3 * 6 * 2 * 4 * 2;

 private:
  Backend backend_;
  std::vector<double> grid_;  // indexed (x, z, a_idx, b, c_idx)
};

ProbabilityTable probability_table(const ExperimentSpec& spec, Backend backend);

/// sum_{a,c = +-1} a c P(a,b,c|x,z) -- the correlator weighted by the
/// unconditioned probabilities, so it carries a factor P(b).
double s_value(const ProbabilityTable& table, int b, int x, int z);

struct BellReport {
  Backend backend;
  std::array<double, 4> p_b;
  // s[b][x][z]; raw carries the P(b) factor, conditional divides it out.
  std::array<std::array<std::array<double, 6>, 3>, 4> s_raw;
  std::array<std::array<std::array<double, 6>, 3>, 4> s_conditional;
  std::array<double, 4> t_b;  // per-outcome functional, from conditional values
  double t;                   // sum_b p_b * t_b
  double reference_t;         // 6*sqrt(2)
  double real_tensor_product_bound;  // reported bound for real tensor-product models
};

BellReport bell_functional(const ProbabilityTable& table);

/// Real-backend conditional state: collapses on Bob's outcome b, reduces to
/// Alice+Charlie (tracing out Bob's mains and flags).  Returns the outcome
/// probability and the reduced density image.
std::pair<double, RealDensity> conditional_alice_charlie(const ExperimentSpec& spec, int b);

}  // namespace rqm

#endif  // REALQM_BELLSWAP_HPP_
