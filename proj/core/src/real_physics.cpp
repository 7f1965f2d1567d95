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

#include "realqm/real_physics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "realqm/tensor_ops.hpp"

namespace rqm {

RealDensity::RealDensity(RealMatrix re, RealMatrix im, SystemShape shape)
    : re_(std::move(re)), im_(std::move(im)), shape_(std::move(shape)) {
  const std::size_t d = shape_.dim();
  if (!re_.is_square() || !im_.is_square() || re_.rows() != d || im_.rows() != d)
    throw std::invalid_argument("RealDensity: block sizes do not match shape");
}

RealDensity RealDensity::from_pure(const RealState& state) {
  // rho = |psi><psi| decomposes as Re(rho) = re re^T + im im^T,
  // Im(rho) = im re^T - re im^T; store the halves.
  const RealMatrix re = 0.5 * (outer(state.re(), state.re()) + outer(state.im(), state.im()));
  const RealMatrix im = 0.5 * (outer(state.im(), state.re()) - outer(state.re(), state.im()));
  return RealDensity(re, im, state.shape());
}

double RealDensity::physical_trace() const {
  // tr(I^(N)) = 2 and tr(J^(N)) = 0.
  return 2.0 * re_.trace();
}

RealMatrix RealDensity::expanded() const {
  const FlagBasis& fb = flag_basis(shape_.parties());
  return kron(re_, fb.i_op) + kron(im_, fb.j_op);
}

RealDensity t1_map(const ComplexOperator& rho) {
  if (rho.kind() != OperatorKind::density)
    throw std::invalid_argument("t1_map: input must be a density operator");
  return RealDensity(0.5 * real_part(rho.matrix()), 0.5 * imag_part(rho.matrix()), rho.shape());
}

double real_density_expectation(const RealDensity& rho, const RealOperator& a) {
  if (rho.shape() != a.shape())
    throw std::invalid_argument("real_density_expectation: shape mismatch");
  // Compact pairs compose like complex numbers; the expanded trace of a pair
  // (re, im) is 2 tr(re).
  const RealMatrix product_re = rho.re() * a.re() - rho.im() * a.im();
  return 2.0 * product_re.trace();
}

RealDensity real_partial_trace(const RealDensity& rho, const std::vector<int>& keep) {
  const SystemShape& shape = rho.shape();
  const int n = shape.parties();
  if (keep.empty()) throw std::invalid_argument("real_partial_trace: keep set must be non-empty");
  if (static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("real_partial_trace: keep set must be a proper subset");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("real_partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("real_partial_trace: keep indices must be strictly increasing");
  }

  // Expanded picture over (main_1..main_N, flag_1..flag_N): discard the
  // unkept mains and, symmetrically, their flags.
  std::vector<int> carrier_dims = shape.dims();
  for (int i = 0; i < n; ++i) carrier_dims.push_back(2);
  const SystemShape carrier(carrier_dims);

  std::vector<int> keep_carrier = keep;
  for (int i : keep) keep_carrier.push_back(n + i);
  std::sort(keep_carrier.begin(), keep_carrier.end());

  const RealMatrix reduced = partial_trace(rho.expanded(), carrier, keep_carrier);

  // Re-compact through the kept-party flag basis.
  const SystemShape kept_shape = shape.subset(keep);
  const FlagBasis& fb = flag_basis(kept_shape.parties());
  const std::size_t d = kept_shape.dim();
  const std::size_t fd = kept_shape.flag_dim();
  RealMatrix re(d, d), im(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double ee = 0, oo = 0, oe = 0, eo = 0;
      for (std::size_t f = 0; f < fd; ++f)
        for (std::size_t g = 0; g < fd; ++g) {
          const double x = reduced(i * fd + f, j * fd + g);
          if (x == 0.0) continue;
          ee += fb.psi_even[f] * x * fb.psi_even[g];
          oo += fb.psi_odd[f] * x * fb.psi_odd[g];
          oe += fb.psi_odd[f] * x * fb.psi_even[g];
          eo += fb.psi_even[f] * x * fb.psi_odd[g];
        }
      re(i, j) = 0.5 * (ee + oo);
      im(i, j) = 0.5 * (oe - eo);
    }
  return RealDensity(std::move(re), std::move(im), kept_shape);
}

RealDensity density_flag_tensor(const RealDensity& a, const RealDensity& b) {
  // The stored blocks carry one factor 1/2 each; compose the unhalved pairs
  // and halve once so the result keeps unit trace.
  RealMatrix out_re = kron(a.re(), b.re()) - kron(a.im(), b.im());
  RealMatrix out_im = kron(a.re(), b.im()) + kron(a.im(), b.re());
  out_re *= 2.0;
  out_im *= 2.0;
  return RealDensity(std::move(out_re), std::move(out_im), a.shape().concat(b.shape()));
}

RealState independent_prep(const std::vector<RealState>& factors) {
  if (factors.empty()) throw std::invalid_argument("independent_prep: no factors");
  RealState out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = flag_tensor_states(out, factors[i]);
  return out;
}

RealOperator embed_local(const RealOperator& a, const SystemShape& total, int party) {
  if (party < 0 || party >= total.parties())
    throw std::invalid_argument("embed_local: party index out of range");
  if (a.shape().parties() != 1 || a.shape().dim_of(0) != total.dim_of(party))
    throw std::invalid_argument("embed_local: operator does not fit the target slot");

  std::size_t left = 1, right = 1;
  for (int i = 0; i < party; ++i) left *= static_cast<std::size_t>(total.dim_of(i));
  for (int i = party + 1; i < total.parties(); ++i) right *= static_cast<std::size_t>(total.dim_of(i));
  const RealMatrix left_id = RealMatrix::identity(left);
  const RealMatrix right_id = RealMatrix::identity(right);
  return RealOperator(kron(kron(left_id, a.re()), right_id),
                      kron(kron(left_id, a.im()), right_id), total);
}

double real_born(const RealState& state, const RealOperator& proj) {
  if (state.shape() != proj.shape()) throw std::invalid_argument("real_born: shape mismatch");
  // Projector images are symmetric (re = re^T, im = -im^T) and idempotent
  // under the pair product.
  double residual = max_abs_diff(proj.re(), proj.re().transpose());
  residual = std::max(residual, max_abs_diff(proj.im(), -1.0 * proj.im().transpose()));
  residual = std::max(residual,
                      max_abs_diff(proj.re() * proj.re() - proj.im() * proj.im(), proj.re()));
  residual = std::max(residual,
                      max_abs_diff(proj.re() * proj.im() + proj.im() * proj.re(), proj.im()));
  if (residual > kTol)
    throw std::invalid_argument("real_born: operator is not a projector image");
  return std::clamp(real_expectation(state, proj), 0.0, 1.0);
}

}  // namespace rqm
