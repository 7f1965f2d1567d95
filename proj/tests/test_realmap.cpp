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

#include <bit>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "realqm/complexqm.hpp"
#include "realqm/random.hpp"
#include "realqm/realmap.hpp"
#include "realqm/tensor_ops.hpp"

using namespace rqm;

namespace {

const SystemShape kQubit({2});
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexState ket(std::size_t k) { return ComplexState(ComplexVector::basis(2, k), kQubit); }

ComplexState times_i(const ComplexState& psi) {
  ComplexVector v = psi.amplitudes();
  v *= cx(0, 1);
  return ComplexState(std::move(v), psi.shape());
}

double compact_diff(const RealState& a, const RealState& b) {
  return std::max(max_abs_diff(a.re(), b.re()), max_abs_diff(a.im(), b.im()));
}

double compact_diff(const RealOperator& a, const RealOperator& b) {
  return std::max(max_abs_diff(a.re(), b.re()), max_abs_diff(a.im(), b.im()));
}

}  // namespace

TEST_CASE("flag_rotation: angles 0, pi/2, pi") {
  CHECK(approx_equal(flag_rotation(0.0), RealMatrix::identity(2)));
  CHECK(approx_equal(flag_rotation(std::numbers::pi / 2), RealMatrix{{0, -1}, {1, 0}}));
  CHECK(approx_equal(flag_rotation(std::numbers::pi), -1.0 * RealMatrix::identity(2)));
}

TEST_CASE("s_map: basis and phase examples") {
  const RealState r0 = s_map(ket(0));
  CHECK(approx_equal(r0.re(), RealVector{1, 0}));
  CHECK(approx_equal(r0.im(), RealVector{0, 0}));

  const RealState ri0 = s_map(times_i(ket(0)));
  CHECK(approx_equal(ri0.re(), RealVector{0, 0}));
  CHECK(approx_equal(ri0.im(), RealVector{1, 0}));
  // |0> and i|0> have orthogonal real images.
  CHECK(real_overlap(r0, ri0) == doctest::Approx(0.0).epsilon(1e-12));

  const ComplexState superpos(ComplexVector{kInvSqrt2, cx(0, kInvSqrt2)}, kQubit);
  const RealState rs = s_map(superpos);
  CHECK(approx_equal(rs.re(), RealVector{kInvSqrt2, 0}));
  CHECK(approx_equal(rs.im(), RealVector{0, kInvSqrt2}));
}

TEST_CASE("s_inv: inverse of s_map") {
  CHECK(max_abs_diff(s_inv(RealState(RealVector{0, 0}, RealVector{1, 0}, kQubit)).amplitudes(),
                     times_i(ket(0)).amplitudes()) < 1e-12);
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const SystemShape shape = rng.shape();
    const ComplexState psi = rng.state(shape);
    CHECK(max_abs_diff(s_inv(s_map(psi)).amplitudes(), psi.amplitudes()) < 1e-12);
  }
}

TEST_CASE("flag_basis: one, two and three parties") {
  const FlagBasis& f1 = flag_basis(1);
  CHECK(approx_equal(f1.psi_even, RealVector{1, 0}));
  CHECK(approx_equal(f1.psi_odd, RealVector{0, 1}));
  // Single-flag J equals X*Z.
  const RealMatrix xz = RealMatrix{{0, 1}, {1, 0}} * RealMatrix{{1, 0}, {0, -1}};
  CHECK(approx_equal(f1.j_op, xz));

  const FlagBasis& f2 = flag_basis(2);
  CHECK(approx_equal(f2.psi_even, RealVector{kInvSqrt2, 0, 0, -kInvSqrt2}));
  CHECK(approx_equal(f2.psi_odd, RealVector{0, kInvSqrt2, kInvSqrt2, 0}));

  // Three parties, pinned by direct enumeration over the bit strings.
  const FlagBasis& f3 = flag_basis(3);
  RealVector even3(8), odd3(8);
  for (std::size_t k = 0; k < 8; ++k) {
    const int w = std::popcount(k);
    if (w % 2 == 0)
      even3[k] = ((w / 2) % 2 ? -0.5 : 0.5);
    else
      odd3[k] = (((w - 1) / 2) % 2 ? -0.5 : 0.5);
  }
  CHECK(approx_equal(f3.psi_even, even3));
  CHECK(approx_equal(f3.psi_odd, odd3));
  CHECK(even3[0] == 0.5);   // |000>
  CHECK(even3[3] == -0.5);  // |011>
  CHECK(even3[5] == -0.5);  // |101>
  CHECK(even3[6] == -0.5);  // |110>

  for (int n = 1; n <= 4; ++n) {
    const FlagBasis& f = flag_basis(n);
    CHECK(f.psi_even.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.psi_odd.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dot(f.psi_even, f.psi_odd) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(max_abs_diff(f.j_op * f.j_op, -1.0 * f.i_op) < 1e-12);
  }
  CHECK_THROWS_AS(flag_basis(0), std::invalid_argument);
}

TEST_CASE("compose_flag_basis_check: split identities hold") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const CheckVerdict v = compose_flag_basis_check(n, m);
    CHECK(v.ok);
    CHECK(v.max_residual < 1e-12);
  }
}

TEST_CASE("t_map: identity, X, Y") {
  const RealOperator t1 = t_map(identity_operator(kQubit));
  CHECK(approx_equal(t1.re(), RealMatrix::identity(2)));
  CHECK(max_abs(t1.im()) < 1e-12);

  const RealOperator tx = t_map(pauli(Pauli::X));
  CHECK(approx_equal(tx.re(), RealMatrix{{0, 1}, {1, 0}}));
  CHECK(max_abs(tx.im()) < 1e-12);

  const RealOperator ty = t_map(pauli(Pauli::Y));
  CHECK(max_abs(ty.re()) < 1e-12);
  CHECK(approx_equal(ty.im(), RealMatrix{{0, -1}, {1, 0}}));
}

TEST_CASE("t_inv_left: compact pairs invert exactly") {
  const ComplexOperator y_back = t_inv_left(t_map(pauli(Pauli::Y)));
  CHECK(max_abs_diff(y_back.matrix(), pauli(Pauli::Y).matrix()) < 1e-12);
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const SystemShape shape = rng.shape(2);
    const ComplexOperator a = rng.general(shape);
    CHECK(max_abs_diff(t_inv_left(t_map(a)).matrix(), a.matrix()) < 1e-12);
    CHECK(max_abs_diff(t_inv_left_expanded(t_map(a).expanded(), shape), a.matrix()) < 1e-10);
  }
}

TEST_CASE("t_inv_left_expanded: rejects matrices outside the image") {
  // The full expanded identity is not an operator image for two parties: the
  // image of 1 is the canonical-subspace projector, not the identity.
  const SystemShape shape({2, 2});
  CHECK_THROWS_AS(t_inv_left_expanded(RealMatrix::identity(16), shape), std::domain_error);
}

TEST_CASE("kernel_projector: structure for two qubits") {
  const SystemShape shape({2, 2});
  const RealMatrix p = kernel_projector(shape);
  CHECK(approx_equal(p * p, p));
  CHECK(approx_equal(p, p.transpose()));
  CHECK(matrix_rank(p) == 8);

  // 1_main (x) (|00>+|11>) and 1_main (x) (|01>-|10>) span the kernel.
  RealVector k1(4), k2(4);
  k1[0] = k1[3] = kInvSqrt2;
  k2[1] = kInvSqrt2;
  k2[2] = -kInvSqrt2;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK((p * kron(RealVector::basis(4, i), k1)).norm() < 1e-12);
    CHECK((p * kron(RealVector::basis(4, i), k2)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(kernel_projector(kQubit), std::invalid_argument);
}

TEST_CASE("canonicalize: picks the canonical representative") {
  const SystemShape shape({2, 2});
  // |01> (x) |00>_F
  RealVector v(16);
  v[1 * 4 + 0] = 1.0;
  const RealState canon = canonicalize(v, shape);
  CHECK(approx_equal(canon.re(), RealVector::basis(4, 1)));
  CHECK(canon.im().norm() < 1e-12);

  // -|01> (x) |11>_F is the same class.
  RealVector w(16);
  w[1 * 4 + 3] = -1.0;
  const RealState canon2 = canonicalize(w, shape);
  CHECK(compact_diff(canon, canon2) < 1e-12);

  // A pure kernel element has no canonical state.
  RealVector k(16);
  k[1 * 4 + 1] = kInvSqrt2;
  k[1 * 4 + 2] = -kInvSqrt2;
  CHECK_THROWS_AS(canonicalize(k, shape), std::domain_error);

  // project_canonical is the plain projection, no rescaling.
  const RealVector projected = project_canonical(v, shape);
  CHECK(max_abs_diff(projected, kernel_projector(shape) * v) < 1e-12);
}

TEST_CASE("equivalent: kernel shifts are invisible") {
  const SystemShape shape({2, 2});
  RealVector v(16);
  v[1 * 4 + 0] = 1.0;  // |01> (x) |00>_F
  RealVector w(16);
  w[1 * 4 + 3] = -1.0;  // -|01> (x) |11>_F
  RealVector u(16);
  u[1 * 4 + 1] = 1.0;  // |01> (x) |01>_F
  CHECK(equivalent(v, v, shape));
  CHECK(equivalent(v, w, shape));
  CHECK_FALSE(equivalent(v, u, shape));
}

TEST_CASE("flag_tensor_states: products and phase splitting") {
  const RealState prod = flag_tensor_states(s_map(ket(0)), s_map(ket(1)));
  CHECK(approx_equal(prod.re(), RealVector::basis(4, 1)));
  CHECK(prod.im().norm() < 1e-12);

  // i|0> (x)_F (-i|1>) carries no net phase.
  const ComplexState minus_i_ket1(ComplexVector{0, cx(0, -1)}, kQubit);
  const RealState split = flag_tensor_states(s_map(times_i(ket(0))), s_map(minus_i_ket1));
  CHECK(compact_diff(prod, split) < 1e-12);

  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const SystemShape s1 = rng.shape(2);
    const SystemShape s2 = rng.shape(1);
    const ComplexState a = rng.state(s1);
    const ComplexState b = rng.state(s2);
    CHECK(compact_diff(flag_tensor_states(s_map(a), s_map(b)), s_map(tensor(a, b))) < 1e-12);
  }
}

TEST_CASE("flag_tensor_ops: matches images of complex products") {
  const ComplexOperator x = pauli(Pauli::X), y = pauli(Pauli::Y), z = pauli(Pauli::Z);
  CHECK(compact_diff(flag_tensor_ops(t_map(x), t_map(z)),
                     t_map(tensor(x, z))) < 1e-12);

  const RealOperator yy = flag_tensor_ops(t_map(y), t_map(y));
  CHECK(compact_diff(yy, t_map(tensor(y, y))) < 1e-12);
  CHECK(max_abs(yy.im()) < 1e-12);
  // Re(Y (x) Y) = -Im(Y) (x) Im(Y).
  const RealMatrix im_y{{0, -1}, {1, 0}};
  CHECK(approx_equal(yy.re(), -1.0 * kron(im_y, im_y)));

  CHECK(compact_diff(flag_tensor_ops(t_map(identity_operator(kQubit)), t_map(y)),
                     t_map(tensor(identity_operator(kQubit), y))) < 1e-12);
}

TEST_CASE("t_apply: operator action on state images") {
  const RealState v = s_map(ket(0));
  CHECK(compact_diff(t_apply(t_map(identity_operator(kQubit)), v), v) < 1e-12);
  // Y|0> = i|1>.
  CHECK(compact_diff(t_apply(t_map(pauli(Pauli::Y)), v), s_map(times_i(ket(1)))) < 1e-12);

  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    const SystemShape shape = rng.shape();
    const ComplexState psi = rng.state(shape);
    const ComplexOperator a = rng.general(shape);
    const ComplexVector image = a.matrix() * psi.amplitudes();
    const RealState expected(real_part(image), imag_part(image), shape);
    CHECK(compact_diff(t_apply(t_map(a), s_map(psi)), expected) < 1e-11);
  }
}

TEST_CASE("real_expectation and real_overlap: base cases") {
  CHECK(real_expectation(s_map(ket(0)), t_map(pauli(Pauli::Z))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const ComplexState plus(ComplexVector{kInvSqrt2, kInvSqrt2}, kQubit);
  CHECK(real_expectation(s_map(plus), t_map(pauli(Pauli::Y))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(real_overlap(s_map(plus), s_map(plus)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phase covariance and rotation commutation") {
  Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const SystemShape shape = rng.shape();
    const ComplexState psi = rng.state(shape);
    const double alpha = 2.0 * std::numbers::pi * rng.uniform();
    ComplexVector shifted = psi.amplitudes();
    shifted *= cx(std::cos(alpha), std::sin(alpha));
    CHECK(compact_diff(s_map(ComplexState(shifted, shape)),
                       apply_flag_rotation(s_map(psi), alpha)) < 1e-12);

    const RealOperator a = t_map(rng.general(shape));
    const std::size_t d = shape.dim();
    const RealOperator rot(std::cos(alpha) * RealMatrix::identity(d),
                           std::sin(alpha) * RealMatrix::identity(d), shape);
    CHECK(compact_diff(compose(a, rot), compose(rot, a)) < 1e-12);
  }
}

TEST_CASE("homomorphism: images of operator products") {
  Rng rng(66);
  for (int t = 0; t < 30; ++t) {
    const SystemShape shape = rng.shape();
    const ComplexOperator a = rng.general(shape);
    const ComplexOperator b = rng.general(shape);
    const ComplexOperator ab(a.matrix() * b.matrix(), shape, OperatorKind::general);
    CHECK(compact_diff(t_map(ab), compose(t_map(a), t_map(b))) < 1e-10);
  }
}

TEST_CASE("hermitian images are symmetric, unitary images orthogonal on the subspace") {
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    const SystemShape shape = rng.shape(2);
    const RealMatrix h = t_map(rng.hermitian(shape)).expanded();
    CHECK(max_abs_diff(h, h.transpose()) < 1e-12);
    const RealMatrix u = t_map(rng.unitary(shape)).expanded();
    CHECK(max_abs_diff(u * u.transpose(),
                       t_map(identity_operator(shape)).expanded()) < 1e-10);
  }
}

TEST_CASE("RealState: expanded payload round trip") {
  Rng rng(88);
  const SystemShape shape({2, 3});
  const ComplexState psi = rng.state(shape);
  const RealState compact = s_map(psi);
  CHECK(compact.representation() == RealRepresentation::compact);

  const RealVector expanded = compact.expanded();
  const RealState restored = RealState::from_expanded(expanded, shape);
  CHECK(restored.representation() == RealRepresentation::expanded);
  CHECK(compact_diff(compact, restored) < 1e-12);
  CHECK(max_abs_diff(restored.expanded(), expanded) < 1e-12);

  // A vector with a kernel component is rejected.
  RealVector off = expanded;
  off[0] += 0.1;  // |00> (x) |00>_F has kernel overlap
  CHECK_THROWS_AS(RealState::from_expanded(off, shape), std::invalid_argument);
}

TEST_CASE("myrheim_projector: agrees with the kernel projector") {
  for (const SystemShape& shape :
       {SystemShape({2, 2}), SystemShape({2, 2, 2}), SystemShape({3, 3})}) {
    const auto [matrix, verdict] = myrheim_projector(shape);
    CHECK(verdict.ok);
    CHECK(verdict.max_residual < 1e-12);
    CHECK(matrix.rows() == shape.expanded_dim());
  }
  CHECK_THROWS_AS(myrheim_projector(SystemShape({2, 2, 2, 2})), std::invalid_argument);
}
