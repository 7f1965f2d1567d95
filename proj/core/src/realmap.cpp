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

#include "realqm/realmap.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "realqm/tensor_ops.hpp"

namespace rqm {

namespace {

FlagBasis build_flag_basis(int n) {
  if (n < 1) throw std::invalid_argument("flag_basis: party count must be >= 1");
  const std::size_t dim = std::size_t{1} << n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << (n - 1)));
  RealVector even(dim), odd(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const int weight = std::popcount(k);
    if (weight % 2 == 0) {
      even[k] = ((weight / 2) % 2 == 0 ? norm : -norm);
    } else {
      odd[k] = (((weight - 1) / 2) % 2 == 0 ? norm : -norm);
    }
  }
  FlagBasis fb{n, even, odd, RealMatrix(), RealMatrix()};
  fb.i_op = outer(even, even) + outer(odd, odd);
  fb.j_op = outer(odd, even) - outer(even, odd);
  return fb;
}

}  // namespace

const FlagBasis& flag_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const FlagBasis>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<const FlagBasis>(build_flag_basis(n))).first;
  return *it->second;
}

RealMatrix flag_rotation(double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return RealMatrix{{c, -s}, {s, c}};
}

RealState::RealState(RealVector re, RealVector im, SystemShape shape)
    : re_(std::move(re)), im_(std::move(im)), shape_(std::move(shape)) {
  if (re_.size() != shape_.dim() || im_.size() != shape_.dim())
    throw std::invalid_argument("RealState: part sizes do not match shape");
}

RealState RealState::from_expanded(const RealVector& v, const SystemShape& shape, double tol) {
  if (v.size() != shape.expanded_dim())
    throw std::invalid_argument("RealState::from_expanded: size mismatch");
  const FlagBasis& fb = flag_basis(shape.parties());
  const std::size_t d = shape.dim();
  const std::size_t fd = shape.flag_dim();
  RealVector re(d), im(d);
  for (std::size_t i = 0; i < d; ++i) {
    double e = 0, o = 0;
    for (std::size_t f = 0; f < fd; ++f) {
      const double x = v[i * fd + f];
      e += fb.psi_even[f] * x;
      o += fb.psi_odd[f] * x;
    }
    re[i] = e;
    im[i] = o;
  }
  if (max_abs_diff(kron(re, fb.psi_even) + kron(im, fb.psi_odd), v) > tol)
    throw std::invalid_argument(
        "RealState::from_expanded: vector is not canonical (has a kernel component)");
  RealState out(std::move(re), std::move(im), shape);
  out.representation_ = RealRepresentation::expanded;
  out.expanded_payload_ = v;
  return out;
}

RealVector RealState::expanded() const {
  if (expanded_payload_) return *expanded_payload_;
  const FlagBasis& fb = flag_basis(shape_.parties());
  return kron(re_, fb.psi_even) + kron(im_, fb.psi_odd);
}

double RealState::norm() const { return std::sqrt(squared_norm()); }

RealState RealState::normalized() const {
  const double n = norm();
  if (n < kProbFloor) throw std::domain_error("RealState::normalized: zero vector");
  return RealState(re_ * (1.0 / n), im_ * (1.0 / n), shape_);
}

RealOperator::RealOperator(RealMatrix re, RealMatrix im, SystemShape shape)
    : re_(std::move(re)), im_(std::move(im)), shape_(std::move(shape)) {
  const std::size_t d = shape_.dim();
  if (!re_.is_square() || !im_.is_square() || re_.rows() != d || im_.rows() != d)
    throw std::invalid_argument("RealOperator: block sizes do not match shape");
}

RealMatrix RealOperator::expanded() const {
  const FlagBasis& fb = flag_basis(shape_.parties());
  return kron(re_, fb.i_op) + kron(im_, fb.j_op);
}

RealState s_map(const ComplexState& psi) {
  return RealState(real_part(psi.amplitudes()), imag_part(psi.amplitudes()), psi.shape());
}

ComplexState s_inv(const RealState& rs) {
  return ComplexState(assemble(rs.re(), rs.im()), rs.shape());
}

RealOperator t_map(const ComplexOperator& a) {
  return RealOperator(real_part(a.matrix()), imag_part(a.matrix()), a.shape());
}

RealOperator t_map(const ComplexMatrix& a, const SystemShape& shape) {
  return RealOperator(real_part(a), imag_part(a), shape);
}

ComplexOperator t_inv_left(const RealOperator& r) {
  return ComplexOperator(assemble(r.re(), r.im()), r.shape(), OperatorKind::general);
}

ComplexMatrix t_inv_left_expanded(const RealMatrix& m, const SystemShape& shape, double tol) {
  if (!m.is_square() || m.rows() != shape.expanded_dim())
    throw std::invalid_argument("t_inv_left_expanded: size mismatch");
  const FlagBasis& fb = flag_basis(shape.parties());
  const std::size_t d = shape.dim();
  const std::size_t fd = shape.flag_dim();

  // Flag-sandwich blocks <x| . |y> for x, y in {even, odd}, taken per main
  // index pair.  On an image Re (x) I + Im (x) J these give
  //   ee = oo = Re,   oe = Im,   eo = -Im.
  RealMatrix ee(d, d), oo(d, d), oe(d, d), eo(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double vee = 0, voo = 0, voe = 0, veo = 0;
      for (std::size_t f = 0; f < fd; ++f)
        for (std::size_t g = 0; g < fd; ++g) {
          const double x = m(i * fd + f, j * fd + g);
          if (x == 0.0) continue;
          vee += fb.psi_even[f] * x * fb.psi_even[g];
          voo += fb.psi_odd[f] * x * fb.psi_odd[g];
          voe += fb.psi_odd[f] * x * fb.psi_even[g];
          veo += fb.psi_even[f] * x * fb.psi_odd[g];
        }
      ee(i, j) = vee;
      oo(i, j) = voo;
      oe(i, j) = voe;
      eo(i, j) = veo;
    }
  const RealMatrix re = 0.5 * (ee + oo);
  const RealMatrix im = 0.5 * (oe - eo);

  const RealOperator candidate(re, im, shape);
  const double residual = max_abs_diff(candidate.expanded(), m);
  if (residual > tol)
    throw std::domain_error("t_inv_left_expanded: matrix is not an operator image (residual " +
                            std::to_string(residual) + ")");
  return assemble(re, im);
}

RealMatrix kernel_projector(const SystemShape& shape) {
  if (shape.parties() < 2)
    throw std::invalid_argument("kernel_projector: quotient is trivial for fewer than 2 parties");
  const FlagBasis& fb = flag_basis(shape.parties());
  return kron(RealMatrix::identity(shape.dim()), fb.i_op);
}

namespace {

// Per-main-index flag components (<even|block>, <odd|block>) of an expanded
// vector; the canonical part of v is re (x) even + im (x) odd.
std::pair<RealVector, RealVector> canonical_components(const RealVector& v,
                                                       const SystemShape& shape) {
  if (v.size() != shape.expanded_dim())
    throw std::invalid_argument("expanded vector size does not match shape");
  const FlagBasis& fb = flag_basis(shape.parties());
  const std::size_t d = shape.dim();
  const std::size_t fd = shape.flag_dim();
  RealVector re(d), im(d);
  for (std::size_t i = 0; i < d; ++i) {
    double e = 0, o = 0;
    for (std::size_t f = 0; f < fd; ++f) {
      e += fb.psi_even[f] * v[i * fd + f];
      o += fb.psi_odd[f] * v[i * fd + f];
    }
    re[i] = e;
    im[i] = o;
  }
  return {std::move(re), std::move(im)};
}

}  // namespace

RealVector project_canonical(const RealVector& v, const SystemShape& shape) {
  auto [re, im] = canonical_components(v, shape);
  const FlagBasis& fb = flag_basis(shape.parties());
  return kron(re, fb.psi_even) + kron(im, fb.psi_odd);
}

RealState canonicalize(const RealVector& v, const SystemShape& shape) {
  auto [re, im] = canonical_components(v, shape);
  const double sq = re.squared_norm() + im.squared_norm();
  if (sq < kProbFloor)
    throw std::domain_error("canonicalize: vector lies in the kernel, no physical state");
  const double inv = 1.0 / std::sqrt(sq);
  return RealState(re * inv, im * inv, shape);
}

bool equivalent(const RealVector& u, const RealVector& v, const SystemShape& shape, double tol) {
  if (u.size() != v.size()) throw std::invalid_argument("equivalent: size mismatch");
  auto [re, im] = canonical_components(u - v, shape);
  return std::sqrt(re.squared_norm() + im.squared_norm()) <= tol;
}

RealState flag_tensor_states(const RealState& a, const RealState& b) {
  return RealState(kron(a.re(), b.re()) - kron(a.im(), b.im()),
                   kron(a.re(), b.im()) + kron(a.im(), b.re()),
                   a.shape().concat(b.shape()));
}

RealOperator flag_tensor_ops(const RealOperator& a, const RealOperator& b) {
  return RealOperator(kron(a.re(), b.re()) - kron(a.im(), b.im()),
                      kron(a.re(), b.im()) + kron(a.im(), b.re()),
                      a.shape().concat(b.shape()));
}

RealOperator compose(const RealOperator& a, const RealOperator& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("compose: shape mismatch");
  return RealOperator(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re(),
                      a.shape());
}

RealState t_apply(const RealOperator& a, const RealState& v) {
  if (a.shape() != v.shape()) throw std::invalid_argument("t_apply: shape mismatch");
  return RealState(a.re() * v.re() - a.im() * v.im(), a.re() * v.im() + a.im() * v.re(),
                   v.shape());
}

double real_expectation(const RealState& v, const RealOperator& a) {
  if (a.shape() != v.shape()) throw std::invalid_argument("real_expectation: shape mismatch");
  return dot(v.re(), a.re() * v.re() - a.im() * v.im()) +
         dot(v.im(), a.re() * v.im() + a.im() * v.re());
}

double real_overlap(const RealState& a, const RealState& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("real_overlap: shape mismatch");
  return dot(a.re(), b.re()) + dot(a.im(), b.im());
}

RealState apply_flag_rotation(const RealState& v, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return RealState(v.re() * c - v.im() * s, v.re() * s + v.im() * c, v.shape());
}

CheckVerdict compose_flag_basis_check(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("compose_flag_basis_check: counts must be >= 1");
  const FlagBasis& fn = flag_basis(n);
  const FlagBasis& fm = flag_basis(m);
  const FlagBasis& fnm = flag_basis(n + m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  double residual = max_abs_diff(
      fnm.psi_even, (kron(fn.psi_even, fm.psi_even) - kron(fn.psi_odd, fm.psi_odd)) * inv_sqrt2);
  residual = std::max(residual, max_abs_diff(fnm.psi_odd,
                                             (kron(fn.psi_even, fm.psi_odd) +
                                              kron(fn.psi_odd, fm.psi_even)) *
                                                 inv_sqrt2));
  residual = std::max(
      residual,
      max_abs_diff(fnm.i_op, 0.5 * (kron(fn.i_op, fm.i_op) - kron(fn.j_op, fm.j_op))));
  residual = std::max(
      residual,
      max_abs_diff(fnm.j_op, 0.5 * (kron(fn.i_op, fm.j_op) + kron(fn.j_op, fm.i_op))));
  return {residual <= kTol, residual};
}

std::pair<RealMatrix, CheckVerdict> myrheim_projector(const SystemShape& shape) {
  const int n = shape.parties();
  if (n != 2 && n != 3)
    throw std::invalid_argument("myrheim_projector: defined for 2 or 3 parties");

  const RealMatrix xz{{0, -1}, {1, 0}};  // X*Z, the single-flag J
  const RealMatrix id2 = RealMatrix::identity(2);

  // Work in the interleaved layout (main_1, flag_1, ..., main_n, flag_n).
  std::vector<int> interleaved_dims;
  for (int i = 0; i < n; ++i) {
    interleaved_dims.push_back(shape.dim_of(i));
    interleaved_dims.push_back(2);
  }
  const SystemShape interleaved(interleaved_dims);

  auto local_j_product = [&](int a, int b) {
    RealMatrix out = RealMatrix::identity(1);
    for (int i = 0; i < n; ++i) {
      out = kron(out, RealMatrix::identity(static_cast<std::size_t>(shape.dim_of(i))));
      out = kron(out, (i == a || i == b) ? xz : id2);
    }
    return out;
  };

  const std::size_t full = interleaved.dim();
  RealMatrix p = 0.5 * (RealMatrix::identity(full) - local_j_product(0, 1));
  if (n == 3) {
    const RealMatrix q = 0.5 * (RealMatrix::identity(full) - local_j_product(0, 2));
    p = p * q;
  }

  // Regroup to (mains, flags) and compare with the kernel projector.
  std::vector<int> perm;
  for (int i = 0; i < n; ++i) perm.push_back(2 * i);
  for (int i = 0; i < n; ++i) perm.push_back(2 * i + 1);
  const RealMatrix grouped = permute_subsystems(p, interleaved, perm);
  const double residual = max_abs_diff(grouped, kernel_projector(shape));
  return {grouped, CheckVerdict{residual <= kTol, residual}};
}

}  // namespace rqm
