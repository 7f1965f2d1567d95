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

#include "realqm/complexqm.hpp"

#include <cmath>
#include <stdexcept>

namespace rqm {

ComplexState::ComplexState(ComplexVector amplitudes, SystemShape shape)
    : amplitudes_(std::move(amplitudes)), shape_(std::move(shape)) {
  if (amplitudes_.size() != shape_.dim())
    throw std::invalid_argument("ComplexState: amplitude count does not match shape");
  if (std::abs(amplitudes_.squared_norm() - 1.0) > kTol)
    throw std::invalid_argument("ComplexState: vector is not normalized");
}

ComplexOperator::ComplexOperator(ComplexMatrix matrix, SystemShape shape, OperatorKind kind)
    : matrix_(std::move(matrix)), shape_(std::move(shape)), kind_(kind) {
  if (!matrix_.is_square() || matrix_.rows() != shape_.dim())
    throw std::invalid_argument("ComplexOperator: matrix does not match shape");
  switch (kind_) {
    case OperatorKind::general:
      break;
    case OperatorKind::hermitian:
      if (!is_hermitian(matrix_)) throw std::invalid_argument("operator tagged hermitian is not");
      break;
    case OperatorKind::projector:
      if (!is_projector(matrix_)) throw std::invalid_argument("operator tagged projector is not");
      break;
    case OperatorKind::unitary:
      if (!is_unitary(matrix_)) throw std::invalid_argument("operator tagged unitary is not");
      break;
    case OperatorKind::density:
      if (!is_hermitian(matrix_) || std::abs(matrix_.trace() - cx{1}) > kTol ||
          !is_positive_semidefinite(matrix_))
        throw std::invalid_argument("operator tagged density is not a density operator");
      break;
  }
}

MeasurementEnsemble::MeasurementEnsemble(std::vector<ComplexOperator> projectors,
                                         std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw std::invalid_argument("ensemble: no projectors");
  if (labels_.size() != projectors_.size())
    throw std::invalid_argument("ensemble: label count mismatch");
  const SystemShape& shape = projectors_.front().shape();
  ComplexMatrix sum(shape.dim(), shape.dim());
  for (const auto& p : projectors_) {
    if (p.shape() != shape) throw std::invalid_argument("ensemble: mixed shapes");
    if (!is_projector(p.matrix())) throw std::invalid_argument("ensemble: element is not a projector");
    sum += p.matrix();
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(shape.dim())) > kTol)
    throw std::invalid_argument("ensemble: projectors do not sum to the identity");
  for (std::size_t r = 0; r < projectors_.size(); ++r)
    for (std::size_t s = r + 1; s < projectors_.size(); ++s) {
      if (max_abs(projectors_[r].matrix() * projectors_[s].matrix()) > kTol)
        throw std::invalid_argument("ensemble: projectors are not mutually orthogonal");
    }
}

std::size_t MeasurementEnsemble::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("ensemble: unknown outcome label '" + label + "'");
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_projector(const ComplexMatrix& m, double tol) {
  return is_hermitian(m, tol) && max_abs_diff(m * m, m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.is_square() &&
         max_abs_diff(m * adjoint(m), ComplexMatrix::identity(m.rows())) <= tol;
}

// Schur-complement positivity test: a Hermitian matrix is PSD iff repeated
// pivoting on its largest diagonal entry never exposes a negative pivot and
// ends with a residual block that vanishes.
bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  ComplexMatrix a = m;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const double d = a(i, i).real();
      if (d > best) {
        best = d;
        p = i;
      }
    }
    if (p == n) break;
    if (best < -tol) return false;
    if (best <= tol) {
      // Remaining diagonal is ~0; PSD then forces the whole block to ~0.
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (done[j]) continue;
          if (std::abs(a(i, j)) > 10 * tol) return false;
        }
      }
      return true;
    }
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        a(i, j) -= a(i, p) * a(p, j) / a(p, p);
      }
    }
  }
  return true;
}

double born_probability(const ComplexState& state, const ComplexOperator& proj) {
  if (proj.shape() != state.shape())
    throw std::invalid_argument("born_probability: shape mismatch");
  if (proj.kind() != OperatorKind::projector && !is_projector(proj.matrix()))
    throw std::invalid_argument("born_probability: operator is not a projector");
  const cx val = dot(state.amplitudes(), proj.matrix() * state.amplitudes());
  if (std::abs(val.imag()) > kTol)
    throw std::logic_error("born_probability: non-real value");
  return std::clamp(val.real(), 0.0, 1.0);
}

double expectation(const ComplexState& state, const ComplexOperator& obs) {
  if (obs.shape() != state.shape()) throw std::invalid_argument("expectation: shape mismatch");
  if (!is_hermitian(obs.matrix()))
    throw std::invalid_argument("expectation: operator is not Hermitian");
  const cx val = dot(state.amplitudes(), obs.matrix() * state.amplitudes());
  if (std::abs(val.imag()) > kTol) throw std::logic_error("expectation: non-real value");
  return val.real();
}

std::pair<double, ComplexState> measure_and_collapse(const ComplexState& state,
                                                     const MeasurementEnsemble& ensemble,
                                                     std::size_t outcome) {
  if (outcome >= ensemble.outcomes())
    throw std::invalid_argument("measure_and_collapse: outcome index out of range");
  const ComplexOperator& proj = ensemble.projectors()[outcome];
  const double p = born_probability(state, proj);
  if (p < kProbFloor)
    throw std::domain_error("measure_and_collapse: outcome has zero probability");
  ComplexVector collapsed = proj.matrix() * state.amplitudes();
  collapsed *= cx{1.0 / std::sqrt(p)};
  return {p, ComplexState(std::move(collapsed), state.shape())};
}

ComplexOperator pauli(Pauli p) {
  const SystemShape qubit({2});
  switch (p) {
    case Pauli::X:
      return ComplexOperator(ComplexMatrix{{0, 1}, {1, 0}}, qubit, OperatorKind::hermitian);
    case Pauli::Y:
      return ComplexOperator(ComplexMatrix{{0, cx(0, -1)}, {cx(0, 1), 0}}, qubit,
                             OperatorKind::hermitian);
    case Pauli::Z:
      return ComplexOperator(ComplexMatrix{{1, 0}, {0, -1}}, qubit, OperatorKind::hermitian);
  }
  throw std::invalid_argument("pauli: unknown name");
}

ComplexOperator identity_operator(const SystemShape& shape) {
  return ComplexOperator(ComplexMatrix::identity(shape.dim()), shape, OperatorKind::projector);
}

ComplexState bell_state(Bell b) {
  const double s = 1.0 / std::sqrt(2.0);
  const SystemShape two_qubits({2, 2});
  switch (b) {
    case Bell::phi_plus:
      return ComplexState(ComplexVector{s, 0, 0, s}, two_qubits);
    case Bell::phi_minus:
      return ComplexState(ComplexVector{s, 0, 0, -s}, two_qubits);
    case Bell::psi_plus:
      return ComplexState(ComplexVector{0, s, s, 0}, two_qubits);
    case Bell::psi_minus:
      return ComplexState(ComplexVector{0, -s, s, 0}, two_qubits);
  }
  throw std::invalid_argument("bell_state: unknown name");
}

ComplexState tensor(const ComplexState& a, const ComplexState& b) {
  return ComplexState(kron(a.amplitudes(), b.amplitudes()), a.shape().concat(b.shape()));
}

ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b) {
  // Every structural kind here is closed under the Kronecker product.
  const OperatorKind kind = (a.kind() == b.kind()) ? a.kind() : OperatorKind::general;
  return ComplexOperator(kron(a.matrix(), b.matrix()), a.shape().concat(b.shape()), kind);
}

ComplexOperator eigenprojector(const ComplexOperator& observable, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigenprojector: sign must be +1 or -1");
  const std::size_t d = observable.dim();
  ComplexMatrix m = ComplexMatrix::identity(d);
  m += observable.matrix() * cx(static_cast<double>(sign));
  m *= cx{0.5};
  return ComplexOperator(std::move(m), observable.shape(), OperatorKind::projector);
}

}  // namespace rqm
