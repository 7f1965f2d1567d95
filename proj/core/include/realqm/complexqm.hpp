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

#ifndef REALQM_COMPLEXQM_HPP_
#define REALQM_COMPLEXQM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "realqm/dense.hpp"
#include "realqm/shape.hpp"
#include "realqm/tensor_ops.hpp"

// Standard complex-valued quantum mechanics over dense matrices.  This layer
// is deliberately naive: it is the ground truth the real-valued formulation is
// checked against, so being obviously correct beats being fast.

namespace rqm {

enum class OperatorKind { general, hermitian, projector, unitary, density };

enum class Pauli { X, Y, Z };

enum class Bell { phi_plus, phi_minus, psi_plus, psi_minus };

/// Normalized pure state over a multipartite shape.
class ComplexState {
 public:
  ComplexState(ComplexVector amplitudes, SystemShape shape);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const SystemShape& shape() const { return shape_; }
  std::size_t dim() const { return amplitudes_.size(); }

 private:
  ComplexVector amplitudes_;
  SystemShape shape_;
};

/// Square operator over a multipartite shape, tagged with the structural kind
/// it is expected to satisfy.  The tag is validated at construction.
class ComplexOperator {
 public:
  ComplexOperator(ComplexMatrix matrix, SystemShape shape, OperatorKind kind);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SystemShape& shape() const { return shape_; }
  OperatorKind kind() const { return kind_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  SystemShape shape_;
  OperatorKind kind_;
};

/// Complete family of mutually orthogonal projectors, one per outcome.
class MeasurementEnsemble {
 public:
  MeasurementEnsemble(std::vector<ComplexOperator> projectors,
                      std::vector<std::string> labels);

  const std::vector<ComplexOperator>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t outcomes() const { return projectors_.size(); }
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<ComplexOperator> projectors_;
  std::vector<std::string> labels_;
};

bool is_hermitian(const ComplexMatrix& m, double tol = kTol);
bool is_projector(const ComplexMatrix& m, double tol = kTol);
bool is_unitary(const ComplexMatrix& m, double tol = kTol);
bool is_positive_semidefinite(const ComplexMatrix& m, double tol = kTol);

/// <psi|P|psi> for a projector P, clamped to [0,1].
double born_probability(const ComplexState& state, const ComplexOperator& proj);

/// <psi|A|psi> for a Hermitian A; the imaginary part must vanish within kTol.
double expectation(const ComplexState& state, const ComplexOperator& obs);

/// Applies projector `outcome` of the ensemble and renormalizes.  Throws if the
/// outcome probability is below kProbFloor (impossible branch).
std::pair<double, ComplexState> measure_and_collapse(const ComplexState& state,
                                                     const MeasurementEnsemble& ensemble,
                                                     std::size_t outcome);

ComplexOperator pauli(Pauli p);
ComplexOperator identity_operator(const SystemShape& shape);

/// The four Bell states.  psi_minus follows the (|10> - |01>)/sqrt(2) sign
/// convention, which differs from the more common one.
ComplexState bell_state(Bell b);

ComplexState tensor(const ComplexState& a, const ComplexState& b);
ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b);

/// (1 + sign*A)/2 for a dichotomic observable A (Hermitian involution).
ComplexOperator eigenprojector(const ComplexOperator& observable, int sign);

}  // namespace rqm

#endif  // REALQM_COMPLEXQM_HPP_
