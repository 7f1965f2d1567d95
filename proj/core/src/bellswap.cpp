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

#include "realqm/bellswap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rqm {

namespace {

constexpr int kAlice = 3;
constexpr int kCharlie = 6;
constexpr int kBob = 4;

int grid_index(int x, int z, int a_idx, int b, int c_idx) {
  return (((x * kCharlie + z) * 2 + a_idx) * kBob + b) * 2 + c_idx;
}

void check_indices(int b, int x, int z) {
  if (b < 0 || b >= kBob) throw std::invalid_argument("bob outcome out of range");
  if (x < 0 || x >= kAlice) throw std::invalid_argument("alice setting out of range");
  if (z < 0 || z >= kCharlie) throw std::invalid_argument("charlie setting out of range");
}

void check_involution(const ComplexOperator& a, const char* who) {
  if (!is_hermitian(a.matrix()))
    throw std::invalid_argument(std::string(who) + " observable is not Hermitian");
  if (max_abs_diff(a.matrix() * a.matrix(), ComplexMatrix::identity(a.dim())) > kTol)
    throw std::invalid_argument(std::string(who) + " observable does not square to the identity");
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::complex_qm ? "complex" : "real";
}

ExperimentSpec::ExperimentSpec(ComplexState source_ab_in, ComplexState source_bc_in,
                               MeasurementEnsemble bob_in, std::vector<ComplexOperator> alice_in,
                               std::vector<ComplexOperator> charlie_in)
    : source_ab(std::move(source_ab_in)),
      source_bc(std::move(source_bc_in)),
      bob(std::move(bob_in)),
      alice(std::move(alice_in)),
      charlie(std::move(charlie_in)) {
  if (source_ab.shape().parties() != 2 || source_bc.shape().parties() != 2)
    throw std::invalid_argument("sources must be bipartite");
  if (bob.outcomes() != kBob) throw std::invalid_argument("Bob needs exactly four outcomes");
  if (alice.size() != kAlice) throw std::invalid_argument("Alice needs exactly three observables");
  if (charlie.size() != kCharlie)
    throw std::invalid_argument("Charlie needs exactly six observables");
  for (const auto& a : alice) check_involution(a, "Alice");
  for (const auto& c : charlie) check_involution(c, "Charlie");
}

ExperimentSpec default_spec() {
  const ComplexState phi_plus = bell_state(Bell::phi_plus);

  std::vector<ComplexOperator> bob_projs;
  for (Bell b : {Bell::phi_plus, Bell::psi_plus, Bell::phi_minus, Bell::psi_minus}) {
    const ComplexVector amp = bell_state(b).amplitudes();
    bob_projs.emplace_back(outer(amp, amp), SystemShape({2, 2}), OperatorKind::projector);
  }
  MeasurementEnsemble bob(std::move(bob_projs), {"00", "01", "10", "11"});

  std::vector<ComplexOperator> alice{pauli(Pauli::Z), pauli(Pauli::X), pauli(Pauli::Y)};

  const double s = 1.0 / std::sqrt(2.0);
  const SystemShape qubit({2});
  auto combo = [&](Pauli p, Pauli q, double sign) {
    ComplexMatrix m = pauli(p).matrix() + pauli(q).matrix() * cx{sign};
    m *= cx{s};
    return ComplexOperator(std::move(m), qubit, OperatorKind::hermitian);
  };
  std::vector<ComplexOperator> charlie{
      combo(Pauli::X, Pauli::Z, 1.0),  combo(Pauli::Z, Pauli::X, -1.0),
      combo(Pauli::Y, Pauli::Z, 1.0),  combo(Pauli::Z, Pauli::Y, -1.0),
      combo(Pauli::X, Pauli::Y, 1.0),  combo(Pauli::X, Pauli::Y, -1.0)};

  return ExperimentSpec(phi_plus, phi_plus, std::move(bob), std::move(alice),
                        std::move(charlie));
}

ProbabilityTable::ProbabilityTable(Backend backend, std::vector<double> grid)
    : backend_(backend), grid_(std::move(grid)) {
  if (grid_.size() != static_cast<std::size_t>(entries))
    throw std::invalid_argument("ProbabilityTable: wrong grid size");
  for (double p : grid_)
    if (p < -1e-12) throw std::invalid_argument("ProbabilityTable: negative entry");
  for (int x = 0; x < kAlice; ++x)
    for (int z = 0; z < kCharlie; ++z) {
      double sum = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < kBob; ++b)
          for (int c = 0; c < 2; ++c) sum += grid_[grid_index(x, z, a, b, c)];
      if (std::abs(sum - 1.0) > kTol)
        throw std::invalid_argument("ProbabilityTable: settings (" + std::to_string(x) + "," +
                                    std::to_string(z) + ") do not sum to 1");
    }
  if (signaling_residual() > kTol)
    throw std::invalid_argument("ProbabilityTable: Bob's marginal depends on the settings");
}

double ProbabilityTable::p(int a_idx, int b, int c_idx, int x, int z) const {
  check_indices(b, x, z);
  if (a_idx < 0 || a_idx > 1 || c_idx < 0 || c_idx > 1)
    throw std::invalid_argument("outcome index out of range");
  return grid_[grid_index(x, z, a_idx, b, c_idx)];
}

double ProbabilityTable::p_outcome(int b, int x, int z) const {
  check_indices(b, x, z);
  double sum = 0;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) sum += grid_[grid_index(x, z, a, b, c)];
  return sum;
}

double ProbabilityTable::signaling_residual() const {
  double worst = 0;
  for (int b = 0; b < kBob; ++b) {
    const double ref = p_outcome(b, 0, 0);
    for (int x = 0; x < kAlice; ++x)
      for (int z = 0; z < kCharlie; ++z)
        worst = std::max(worst, std::abs(p_outcome(b, x, z) - ref));
  }
  return worst;
}

ProbabilityTable probability_table(const ExperimentSpec& spec, Backend backend) {
  std::vector<double> grid(ProbabilityTable::entries, 0.0);

  if (backend == Backend::complex_qm) {
    const ComplexState psi0 = tensor(spec.source_ab, spec.source_bc);
    for (int x = 0; x < kAlice; ++x) {
      const std::array<ComplexOperator, 2> pa{eigenprojector(spec.alice[x], -1),
                                              eigenprojector(spec.alice[x], +1)};
      for (int b = 0; b < kBob; ++b) {
        const ComplexOperator& pb = spec.bob.projectors()[b];
        for (int z = 0; z < kCharlie; ++z) {
          const std::array<ComplexOperator, 2> pc{eigenprojector(spec.charlie[z], -1),
                                                  eigenprojector(spec.charlie[z], +1)};
          for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
              grid[grid_index(x, z, a, b, c)] =
                  born_probability(psi0, tensor(tensor(pa[a], pb), pc[c]));
        }
      }
    }
    return ProbabilityTable(backend, std::move(grid));
  }

  // Real backend: compose everything with the flag tensor product and never
  // touch a complex amplitude past the per-party operator images.
  const RealState state0 = flag_tensor_states(s_map(spec.source_ab), s_map(spec.source_bc));
  for (int x = 0; x < kAlice; ++x) {
    const std::array<RealOperator, 2> pa{t_map(eigenprojector(spec.alice[x], -1)),
                                         t_map(eigenprojector(spec.alice[x], +1))};
    for (int b = 0; b < kBob; ++b) {
      const RealOperator pb = t_map(spec.bob.projectors()[b]);
      for (int z = 0; z < kCharlie; ++z) {
        const std::array<RealOperator, 2> pc{t_map(eigenprojector(spec.charlie[z], -1)),
                                             t_map(eigenprojector(spec.charlie[z], +1))};
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c)
            grid[grid_index(x, z, a, b, c)] =
                real_born(state0, flag_tensor_ops(flag_tensor_ops(pa[a], pb), pc[c]));
      }
    }
  }
  return ProbabilityTable(backend, std::move(grid));
}

double s_value(const ProbabilityTable& table, int b, int x, int z) {
  double s = 0;
  for (int a_idx = 0; a_idx < 2; ++a_idx)
    for (int c_idx = 0; c_idx < 2; ++c_idx) {
      const double a = a_idx == 0 ? -1.0 : 1.0;
      const double c = c_idx == 0 ? -1.0 : 1.0;
      s += a * c * table.p(a_idx, b, c_idx, x, z);
    }
  return s;
}

BellReport bell_functional(const ProbabilityTable& table) {
  BellReport report{};
  report.backend = table.backend();
  report.reference_t = 6.0 * std::sqrt(2.0);
  report.real_tensor_product_bound = 7.6605;

  for (int b = 0; b < kBob; ++b) {
    report.p_b[b] = table.p_outcome(b, 0, 0);
    for (int x = 0; x < kAlice; ++x)
      for (int z = 0; z < kCharlie; ++z) {
        const double raw = s_value(table, b, x, z);
        report.s_raw[b][x][z] = raw;
        report.s_conditional[b][x][z] = raw / report.p_b[b];
      }
  }

  // Three CHSH blocks.  Each row of settings carries the sign that tracks the
  // correlation signature of the conditional state for outcome b1b2: rows
  // measured with the first observable flip with b2, rows with the second flip
  // with b1, rows with the third flip with b1+b2.
  for (int b = 0; b < kBob; ++b) {
    const int b1 = (b >> 1) & 1, b2 = b & 1;
    const double g1 = b1 ? -1.0 : 1.0;
    const double g2 = b2 ? -1.0 : 1.0;
    const double g12 = g1 * g2;
    const auto& sc = report.s_conditional[b];
    report.t_b[b] = g2 * (sc[0][0] + sc[0][1]) + g1 * (sc[1][0] - sc[1][1]) +
                    g2 * (sc[0][2] + sc[0][3]) - g12 * (sc[2][2] - sc[2][3]) +
                    g1 * (sc[1][4] + sc[1][5]) - g12 * (sc[2][4] - sc[2][5]);
  }

  report.t = 0;
  for (int b = 0; b < kBob; ++b) report.t += report.p_b[b] * report.t_b[b];
  return report;
}

std::pair<double, RealDensity> conditional_alice_charlie(const ExperimentSpec& spec, int b) {
  if (b < 0 || b >= kBob) throw std::invalid_argument("bob outcome out of range");
  const RealState state0 = flag_tensor_states(s_map(spec.source_ab), s_map(spec.source_bc));

  const SystemShape qubit({2});
  const RealOperator identity_a = t_map(identity_operator(qubit));
  const RealOperator identity_c = t_map(identity_operator(qubit));
  const RealOperator bob_embedded = flag_tensor_ops(
      flag_tensor_ops(identity_a, t_map(spec.bob.projectors()[b])), identity_c);

  const RealState collapsed = t_apply(bob_embedded, state0);
  const double p = collapsed.squared_norm();
  if (p < kProbFloor) throw std::domain_error("conditional_alice_charlie: impossible outcome");
  const RealDensity joint = RealDensity::from_pure(collapsed.normalized());
  return {p, real_partial_trace(joint, {0, 3})};
}

}  // namespace rqm
