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

#ifndef REALQM_REAL_PHYSICS_HPP_
#define REALQM_REAL_PHYSICS_HPP_

#include <vector>

#include "realqm/realmap.hpp"

// Physics on the real side: density operators, reduced states, the Born rule,
// and the locality embeddings for independent preparations and local
// operations.

namespace rqm {

/// Real image of a density operator.  Stores the trace-preserving convention
/// (Re(rho)/2, Im(rho)/2), so the represented operator
/// re (x) I^(N) + im (x) J^(N) has unit trace.
class RealDensity {
 public:
  RealDensity(RealMatrix re, RealMatrix im, SystemShape shape);

  static RealDensity from_pure(const RealState& state);

  const RealMatrix& re() const { return re_; }
  const RealMatrix& im() const { return im_; }
  const SystemShape& shape() const { return shape_; }

  /// Trace of the represented operator (1 for a proper density).
  double physical_trace() const;

  RealMatrix expanded() const;

 private:
  RealMatrix re_, im_;
  SystemShape shape_;
};

/// rho -> (Re(rho)/2, Im(rho)/2).  Input must be tagged density.
RealDensity t1_map(const ComplexOperator& rho);

/// tr[T1(rho) T(A)], which equals tr(rho A) for Hermitian A.
double real_density_expectation(const RealDensity& rho, const RealOperator& a);

/// Reduced state of the kept parties.  Works in the expanded picture: traces
/// out the discarded mains together with their flags, then re-compacts through
/// the kept-party flag basis.  keep must be a strictly increasing, non-empty,
/// proper subset of the party indices.
RealDensity real_partial_trace(const RealDensity& rho, const std::vector<int>& keep);

/// Trace-preserving composition of independent density images; the real image
/// of rho_a (x) rho_b.
RealDensity density_flag_tensor(const RealDensity& a, const RealDensity& b);

/// Independent preparation: iterated flag tensor product of per-party states.
RealState independent_prep(const std::vector<RealState>& factors);

/// Embeds a single-party operator image at party index `party` of `total`,
/// acting trivially everywhere else.
RealOperator embed_local(const RealOperator& a, const SystemShape& total, int party);

/// Born rule on the real side; proj must be the image of a projector
/// (checked: symmetric and idempotent as a compact pair).
double real_born(const RealState& state, const RealOperator& proj);

}  // namespace rqm

#endif  // REALQM_REAL_PHYSICS_HPP_
