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

#include <cmath>

#include "doctest.h"
#include "realqm/complexqm.hpp"
#include "realqm/random.hpp"
#include "realqm/tensor_ops.hpp"

using namespace rqm;

namespace {

const SystemShape kQubit({2});

ComplexState ket(std::size_t k) {
  return ComplexState(ComplexVector::basis(2, k), kQubit);
}

ComplexState plus_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexState(ComplexVector{s, s}, kQubit);
}

ComplexOperator basis_projector(std::size_t k) {
  const ComplexVector b = ComplexVector::basis(2, k);
  return ComplexOperator(outer(b, b), kQubit, OperatorKind::projector);
}

MeasurementEnsemble z_measurement() {
  return MeasurementEnsemble({basis_projector(0), basis_projector(1)}, {"0", "1"});
}

}  // namespace

TEST_CASE("born_probability: computational-basis cases") {
  CHECK(born_probability(ket(0), basis_projector(0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(born_probability(ket(0), basis_projector(1)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("born_probability: Bob marginal of the swapping network is 1/4") {
  const ComplexState psi0 = tensor(bell_state(Bell::phi_plus), bell_state(Bell::phi_plus));
  const ComplexVector phi = bell_state(Bell::phi_plus).amplitudes();
  const ComplexOperator middle(outer(phi, phi), SystemShape({2, 2}), OperatorKind::projector);
  const ComplexOperator full =
      tensor(tensor(identity_operator(kQubit), middle), identity_operator(kQubit));
  CHECK(born_probability(psi0, full) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("born_probability: rejects non-projectors and shape mismatch") {
  CHECK_THROWS_AS(born_probability(ket(0), pauli(Pauli::X)), std::invalid_argument);
  CHECK_THROWS_AS(born_probability(tensor(ket(0), ket(0)), basis_projector(0)),
                  std::invalid_argument);
}

TEST_CASE("expectation: single-qubit cases") {
  CHECK(expectation(ket(0), pauli(Pauli::Z)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expectation(plus_state(), pauli(Pauli::Z)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("expectation: Bell pair correlator Z (x) (X+Z)/sqrt(2)") {
  const ComplexState phi = bell_state(Bell::phi_plus);
  ComplexMatrix c1 = pauli(Pauli::X).matrix() + pauli(Pauli::Z).matrix();
  c1 *= cx{1.0 / std::sqrt(2.0)};
  const ComplexOperator obs(kron(pauli(Pauli::Z).matrix(), c1), SystemShape({2, 2}),
                            OperatorKind::hermitian);
  CHECK(expectation(phi, obs) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("expectation: rejects non-Hermitian input") {
  const ComplexOperator bad(ComplexMatrix{{0, 1}, {0, 0}}, kQubit, OperatorKind::general);
  CHECK_THROWS_AS(expectation(ket(0), bad), std::invalid_argument);
}

TEST_CASE("measure_and_collapse: deterministic and balanced branches") {
  const auto [p0, s0] = measure_and_collapse(ket(0), z_measurement(), 0);
  CHECK(p0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(s0.amplitudes(), ket(0).amplitudes()) < 1e-12);

  const auto [p1, s1] = measure_and_collapse(plus_state(), z_measurement(), 1);
  CHECK(p1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(max_abs_diff(s1.amplitudes(), ket(1).amplitudes()) < 1e-12);
}

TEST_CASE("measure_and_collapse: entanglement swap on outcome 00") {
  const ComplexState psi0 = tensor(bell_state(Bell::phi_plus), bell_state(Bell::phi_plus));
  std::vector<ComplexOperator> projs;
  for (Bell b : {Bell::phi_plus, Bell::psi_plus, Bell::phi_minus, Bell::psi_minus}) {
    const ComplexVector amp = bell_state(b).amplitudes();
    projs.push_back(tensor(tensor(identity_operator(kQubit),
                                  ComplexOperator(outer(amp, amp), SystemShape({2, 2}),
                                                  OperatorKind::projector)),
                           identity_operator(kQubit)));
  }
  const MeasurementEnsemble bell_on_middle(projs, {"00", "01", "10", "11"});
  const auto [p, collapsed] = measure_and_collapse(psi0, bell_on_middle, 0);
  CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
  // Reorder (A, B1, B2, C) -> (A, C, B1, B2): Alice and Charlie hold phi+.
  const ComplexVector reordered =
      permute_subsystems(collapsed.amplitudes(), SystemShape({2, 2, 2, 2}), {0, 3, 1, 2});
  const ComplexVector expected =
      kron(bell_state(Bell::phi_plus).amplitudes(), bell_state(Bell::phi_plus).amplitudes());
  CHECK(max_abs_diff(reordered, expected) < 1e-12);
}

TEST_CASE("measure_and_collapse: impossible branch throws") {
  CHECK_THROWS_AS(measure_and_collapse(ket(0), z_measurement(), 1), std::domain_error);
}

TEST_CASE("pauli and bell_state constants") {
  CHECK(approx_equal(pauli(Pauli::Y).matrix(),
                     ComplexMatrix{{0, cx(0, -1)}, {cx(0, 1), 0}}));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(approx_equal(bell_state(Bell::phi_plus).amplitudes(), ComplexVector{s, 0, 0, s}));
  // Sign convention: psi- = (|10> - |01>)/sqrt(2).
  CHECK(approx_equal(bell_state(Bell::psi_minus).amplitudes(), ComplexVector{0, -s, s, 0}));
}

TEST_CASE("state and operator validation") {
  CHECK_THROWS_AS(ComplexState(ComplexVector{1, 1}, kQubit), std::invalid_argument);
  CHECK_THROWS_AS(ComplexOperator(pauli(Pauli::X).matrix(), kQubit, OperatorKind::projector),
                  std::invalid_argument);
  // Hermitian with unit trace but a negative eigenvalue is not a density.
  CHECK_THROWS_AS(ComplexOperator(ComplexMatrix{{1.5, 0}, {0, -0.5}}, kQubit,
                                  OperatorKind::density),
                  std::invalid_argument);
  CHECK_NOTHROW(ComplexOperator(ComplexMatrix{{0.5, 0}, {0, 0.5}}, kQubit, OperatorKind::density));
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(MeasurementEnsemble({basis_projector(0)}, {"0"}), std::invalid_argument);
  CHECK_THROWS_AS(MeasurementEnsemble({basis_projector(0), basis_projector(0)}, {"0", "1"}),
                  std::invalid_argument);
  CHECK(z_measurement().index_of("1") == 1);
  CHECK_THROWS_AS(z_measurement().index_of("2"), std::invalid_argument);
}

TEST_CASE("ensemble probabilities sum to one on random states") {
  Rng rng(505);
  for (int t = 0; t < 25; ++t) {
    const SystemShape shape = rng.shape(2);
    const ComplexState psi = rng.state(shape);
    double total = 0;
    const std::size_t d = shape.dim();
    const ComplexMatrix u = rng.unitary(shape).matrix();
    for (std::size_t k = 0; k < d; ++k) {
      ComplexVector col(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = u(i, k);
      total += born_probability(psi, ComplexOperator(outer(col, col), shape,
                                                     OperatorKind::projector));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}
