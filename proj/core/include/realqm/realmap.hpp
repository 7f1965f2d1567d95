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

#ifndef REALQM_REALMAP_HPP_
#define REALQM_REALMAP_HPP_

#include <optional>
#include <utility>

#include "realqm/complexqm.hpp"
#include "realqm/dense.hpp"
#include "realqm/shape.hpp"

// Real-valued formulation of quantum mechanics.
//
// A complex state |psi> on C^D maps to the pair (Re psi, Im psi); a complex
// operator A maps to the pair (Re A, Im A).  In the full real carrier space
// (R^d1 x R^2) x ... x (R^dN x R^2) -- one two-dimensional "flag" per party,
// grouped as (main_1..main_N, flag_1..flag_N) -- these pairs stand for
//
//   state:    Re(psi) (x) psi_even^(N)  +  Im(psi) (x) psi_odd^(N)
//   operator: Re(A)   (x) I^(N)        +  Im(A)   (x) J^(N)
//
// where psi_even/psi_odd span the canonical flag subspace and J^(N) acts on it
// as the imaginary unit.  Vectors differing by an element of the kernel of the
// tensored inverse map describe the same physical state; the projector onto
// the orthogonal complement of that kernel selects canonical representatives.
// All algebra below is exact on the compact (re, im) pairs; expanded vectors
// and matrices exist for quotient-space and cross-checking work.

namespace rqm {

/// Canonical flag-space data for N parties: the even/odd Hamming-weight basis
/// vectors of the canonical subspace, the projector I^(N) onto it, and the
/// operator J^(N) realizing multiplication by i on it.
struct FlagBasis {
  int parties;
  RealVector psi_even;  // dim 2^N
  RealVector psi_odd;
  RealMatrix i_op;  // |even><even| + |odd><odd|
  RealMatrix j_op;  // |odd><even| - |even><odd|
};

/// Returns the cached flag basis for n >= 1 parties.  Thread-safe; the
/// returned reference stays valid for the lifetime of the program.
const FlagBasis& flag_basis(int n);

/// SO(2) rotation [[cos a, -sin a], [sin a, cos a]]; the real image of the
/// global phase e^{ia}.  flag_rotation(pi/2) is the single-flag J.
RealMatrix flag_rotation(double alpha);

enum class RealRepresentation { compact, expanded };

/// Real image of a pure state, held as the compact pair (re, im) over the main
/// space.  States satisfy |re|^2 + |im|^2 = 1; operator images of states may
/// be sub-normalized.  When constructed from an expanded vector the canonical
/// payload is retained.
class RealState {
 public:
  RealState(RealVector re, RealVector im, SystemShape shape);

  /// Builds from a full carrier-space vector, which must already be canonical
  /// (invariant under the kernel projector within tol).
  static RealState from_expanded(const RealVector& v, const SystemShape& shape,
                                 double tol = kTol);

  const RealVector& re() const { return re_; }
  const RealVector& im() const { return im_; }
  const SystemShape& shape() const { return shape_; }
  RealRepresentation representation() const { return representation_; }

  /// re (x) psi_even + im (x) psi_odd in grouped order (mains, then flags).
  RealVector expanded() const;

  double squared_norm() const { return re_.squared_norm() + im_.squared_norm(); }
  double norm() const;
  RealState normalized() const;

 private:
  RealVector re_, im_;
  SystemShape shape_;
  RealRepresentation representation_ = RealRepresentation::compact;
  std::optional<RealVector> expanded_payload_;
};

/// Real image of an operator, held as the compact block pair (re, im).
class RealOperator {
 public:
  RealOperator(RealMatrix re, RealMatrix im, SystemShape shape);

  const RealMatrix& re() const { return re_; }
  const RealMatrix& im() const { return im_; }
  const SystemShape& shape() const { return shape_; }

  /// Re (x) I^(N) + Im (x) J^(N) on the full carrier space, grouped order.
  RealMatrix expanded() const;

 private:
  RealMatrix re_, im_;
  SystemShape shape_;
};

struct CheckVerdict {
  bool ok;
  double max_residual;
};

// ---- state maps ----------------------------------------------------------

/// |psi> -> (Re psi, Im psi).  For composite shapes this is the canonical-
/// representative map; the single-party flag picture is the N=1 case.
RealState s_map(const ComplexState& psi);

/// Left inverse of s_map: reassembles re + i*im.
ComplexState s_inv(const RealState& rs);

// ---- operator maps ---------------------------------------------------------

RealOperator t_map(const ComplexOperator& a);
RealOperator t_map(const ComplexMatrix& a, const SystemShape& shape);

/// Exact inverse on compact pairs: (re, im) -> re + i*im.
ComplexOperator t_inv_left(const RealOperator& r);

/// Inverts a full carrier-space matrix.  Throws std::domain_error when the
/// input is not the image of any complex operator (re-expansion residual
/// above tol).
ComplexMatrix t_inv_left_expanded(const RealMatrix& m, const SystemShape& shape,
                                  double tol = kTol);

// ---- quotient-space machinery ----------------------------------------------

/// Projector onto the canonical subspace, 1_main (x) (|even><even| + |odd><odd|),
/// as an explicit expanded-space matrix.  Requires N >= 2 (the quotient is
/// trivial for a single party).
RealMatrix kernel_projector(const SystemShape& shape);

/// P_perp v without rescaling.
RealVector project_canonical(const RealVector& v, const SystemShape& shape);

/// Canonical representative of [v], renormalized to a unit state.  Throws
/// std::domain_error when v lies entirely in the kernel.
RealState canonicalize(const RealVector& v, const SystemShape& shape);

/// True iff u and v represent the same physical state, i.e. u - v is in the
/// kernel of the tensored inverse map.
bool equivalent(const RealVector& u, const RealVector& v, const SystemShape& shape,
                double tol = kTol);

// ---- flag tensor products ---------------------------------------------------
//
// Composition rule of the quotient space: with a = a' + i a'' etc. the pairs
// multiply like complex numbers under (x).

RealState flag_tensor_states(const RealState& a, const RealState& b);
RealOperator flag_tensor_ops(const RealOperator& a, const RealOperator& b);

/// Operator product on compact pairs; the image of the complex product.
RealOperator compose(const RealOperator& a, const RealOperator& b);

// ---- real-side dynamics and statistics --------------------------------------

/// Action of an operator image on a state image; compact form of
/// T(A) R(psi) = R(A psi).
RealState t_apply(const RealOperator& a, const RealState& v);

/// v^T T(A) v evaluated on compact pairs; equals <psi|A|psi> when the inputs
/// are images of psi and a Hermitian A.
double real_expectation(const RealState& v, const RealOperator& a);

/// a^T b on compact pairs; equals Re<phi|psi> for state images.
double real_overlap(const RealState& a, const RealState& b);

/// Applies the composite flag rotation by angle alpha (compact form).
RealState apply_flag_rotation(const RealState& v, double alpha);

// ---- structural self-checks -------------------------------------------------

/// Verifies the flag-basis composition identities for splitting N+M parties
/// into N and M: the even/odd vectors compose through the +-/sqrt(2) rule and
/// I/J compose through the 1/2 rule.
CheckVerdict compose_flag_basis_check(int n, int m);

/// Builds the positive-subspace projector of the local-J construction
/// (P+ for two parties, P+Q+ for three, J = 1 (x) XZ per party) and compares
/// it entrywise with kernel_projector.
std::pair<RealMatrix, CheckVerdict> myrheim_projector(const SystemShape& shape);

}  // namespace rqm

#endif  // REALQM_REALMAP_HPP_
