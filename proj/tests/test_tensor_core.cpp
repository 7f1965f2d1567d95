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
#include "oracles.hpp"
#include "realqm/complexqm.hpp"
#include "realqm/random.hpp"
#include "realqm/tensor_ops.hpp"

using namespace rqm;

TEST_CASE("kron: identity factors") {
  CHECK(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)));
}

TEST_CASE("kron: basis vectors concatenate") {
  const ComplexVector ket0 = ComplexVector::basis(2, 0);
  const ComplexVector ket1 = ComplexVector::basis(2, 1);
  CHECK(approx_equal(kron(ket0, ket1), ComplexVector{0, 1, 0, 0}));
}

TEST_CASE("kron: X (x) Z against direct expansion") {
  const ComplexMatrix x = pauli(Pauli::X).matrix();
  const ComplexMatrix z = pauli(Pauli::Z).matrix();
  const ComplexMatrix xz = kron(x, z);
  const ComplexMatrix expected{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  CHECK(approx_equal(xz, expected));
  CHECK(approx_equal(xz, test::kron_oracle(x, z)));
  // (X (x) Z)|00> = |10>
  CHECK(approx_equal(xz * kron(ComplexVector::basis(2, 0), ComplexVector::basis(2, 0)),
                     ComplexVector{0, 0, 1, 0}));
}

TEST_CASE("kron: random inputs match the scalar-loop oracle") {
  Rng rng(101);
  for (int t = 0; t < 50; ++t) {
    const auto da = static_cast<std::size_t>(rng.uniform_int(2, 3));
    const auto db = static_cast<std::size_t>(rng.uniform_int(2, 3));
    ComplexMatrix a(da, da), b(db, db);
    for (auto& v : a.data()) v = rng.complex_entry();
    for (auto& v : b.data()) v = rng.complex_entry();
    CHECK(max_abs_diff(kron(a, b), test::kron_oracle(a, b)) < 1e-12);
    const ComplexVector u = rng.vector(da);
    const ComplexVector w = rng.vector(db);
    CHECK(max_abs_diff(kron(u, w), test::kron_oracle(u, w)) < 1e-12);
  }
}

TEST_CASE("permute_subsystems: identity and swap") {
  const SystemShape two_qubits({2, 2});
  const ComplexVector ket01{0, 1, 0, 0};
  CHECK(approx_equal(permute_subsystems(ket01, two_qubits, {0, 1}), ket01));
  CHECK(approx_equal(permute_subsystems(ket01, two_qubits, {1, 0}), ComplexVector{0, 0, 1, 0}));
}

TEST_CASE("permute_subsystems: interleaved to grouped on four qubits") {
  // |m1 f1 m2 f2> = |0 1 0 0> regrouped to (m1, m2, f1, f2) is |0 0 1 0>.
  const SystemShape shape({2, 2, 2, 2});
  ComplexVector v(16);
  v[4] = 1;  // digits 0,1,0,0
  const ComplexVector grouped = permute_subsystems(v, shape, {0, 2, 1, 3});
  ComplexVector expected(16);
  expected[2] = 1;  // digits 0,0,1,0
  CHECK(approx_equal(grouped, expected));
  CHECK(approx_equal(grouped, test::permute_oracle(v, {2, 2, 2, 2}, {0, 2, 1, 3})));
}

TEST_CASE("permute_subsystems: random vectors match the digit-arithmetic oracle") {
  Rng rng(202);
  for (int t = 0; t < 50; ++t) {
    const SystemShape shape = rng.shape(4);
    ComplexVector v(shape.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.complex_entry();
    std::vector<int> perm(static_cast<std::size_t>(shape.parties()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1],
                perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
    CHECK(max_abs_diff(permute_subsystems(v, shape, perm),
                       test::permute_oracle(v, shape.dims(), perm)) < 1e-12);
  }
}

TEST_CASE("permute_subsystems: rejects non-permutations") {
  const SystemShape shape({2, 2});
  const ComplexVector v(4);
  CHECK_THROWS_AS(permute_subsystems(v, shape, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(permute_subsystems(v, shape, {0}), std::invalid_argument);
  CHECK_THROWS_AS(permute_subsystems(v, shape, {0, 2}), std::invalid_argument);
}

TEST_CASE("partial_trace: identity factors") {
  const SystemShape shape({2, 2});
  const ComplexMatrix rho = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(approx_equal(partial_trace(rho, shape, {1}), 2.0 * ComplexMatrix::identity(2)));
}

TEST_CASE("partial_trace: Bell pair marginal is maximally mixed") {
  const ComplexVector phi = bell_state(Bell::phi_plus).amplitudes();
  const ComplexMatrix rho = outer(phi, phi);
  const ComplexMatrix reduced = partial_trace(rho, SystemShape({2, 2}), {0});
  CHECK(approx_equal(reduced, 0.5 * ComplexMatrix::identity(2)));
  CHECK(approx_equal(reduced, test::trace_out_second_oracle(rho, 2, 2)));
  CHECK(approx_equal(partial_trace(rho, SystemShape({2, 2}), {1}),
                     test::trace_out_first_oracle(rho, 2, 2)));
}

TEST_CASE("partial_trace: factorizes on product operators") {
  Rng rng(303);
  for (int t = 0; t < 20; ++t) {
    const SystemShape s1({rng.uniform_int(2, 3)});
    const SystemShape s2({rng.uniform_int(2, 3)});
    const ComplexMatrix a = rng.general(s1).matrix();
    const ComplexMatrix b = rng.general(s2).matrix();
    const ComplexMatrix joint = kron(a, b);
    const SystemShape shape = s1.concat(s2);
    CHECK(max_abs_diff(partial_trace(joint, shape, {1}), ComplexMatrix(b * a.trace())) < 1e-12);
    CHECK(max_abs_diff(partial_trace(joint, shape, {0}), ComplexMatrix(a * b.trace())) < 1e-12);
  }
}

TEST_CASE("partial_trace: preserves the total trace") {
  Rng rng(404);
  for (int t = 0; t < 30; ++t) {
    SystemShape shape = rng.shape(3);
    while (shape.parties() < 2) shape = rng.shape(3);
    const ComplexMatrix h = rng.hermitian(shape).matrix();
    CHECK(std::abs(partial_trace(h, shape, {0}).trace() - h.trace()) < 1e-10);
  }
}

TEST_CASE("partial_trace: argument validation") {
  const SystemShape shape({2, 2});
  const ComplexMatrix rho = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(partial_trace(rho, shape, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, shape, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, shape, {0, 2}), std::invalid_argument);
}

TEST_CASE("matrix_rank: pivots and degeneracy") {
  CHECK(matrix_rank(RealMatrix::identity(4)) == 4);
  const RealVector v{1, 2, 3};
  CHECK(matrix_rank(outer(v, v)) == 1);
  RealMatrix m{{1, 2}, {2, 4}};
  CHECK(matrix_rank(m) == 1);
}

TEST_CASE("SystemShape: validation and indexing") {
  CHECK_THROWS_AS(SystemShape({}), std::invalid_argument);
  CHECK_THROWS_AS(SystemShape({2, 1}), std::invalid_argument);
  const SystemShape s({2, 3, 2});
  CHECK(s.dim() == 12);
  CHECK(s.flag_dim() == 8);
  CHECK(s.expanded_dim() == 96);
  CHECK(s.ravel(s.unravel(7)) == 7);
}
