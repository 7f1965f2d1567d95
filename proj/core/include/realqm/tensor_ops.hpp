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

#ifndef REALQM_TENSOR_OPS_HPP_
#define REALQM_TENSOR_OPS_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "realqm/dense.hpp"
#include "realqm/shape.hpp"

namespace rqm {

// ---- Kronecker products ------------------------------------------------------
//
// Output factor order is the concatenation of the input factor orders, in the
// big-endian indexing of SystemShape.

template <class T>
Vector<T> kron(const Vector<T>& a, const Vector<T>& b) {
  Vector<T> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      if (aij == T{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

template <class T>
Vector<T> kron(std::initializer_list<Vector<T>> parts) {
  Vector<T> out{T{1}};
  for (const auto& p : parts) out = kron(out, p);
  return out;
}

template <class T>
Matrix<T> kron(std::initializer_list<Matrix<T>> parts) {
  Matrix<T> out = Matrix<T>::identity(1);
  for (const auto& p : parts) out = kron(out, p);
  return out;
}

// ---- subsystem permutations --------------------------------------------------

/// A valid permutation is a bijection on {0, ..., K-1}; perm[t] names the
/// source factor placed at target slot t.
inline void check_permutation(const std::vector<int>& perm, int parties) {
  if (static_cast<int>(perm.size()) != parties)
    throw std::invalid_argument("permutation length does not match factor count");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= parties || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation of the subsystem indices");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

inline std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) inv[static_cast<std::size_t>(perm[t])] = static_cast<int>(t);
  return inv;
}

/// Reindex a product-space vector so factor order follows perm.
template <class T>
Vector<T> permute_subsystems(const Vector<T>& v, const SystemShape& shape,
                             const std::vector<int>& perm) {
  check_permutation(perm, shape.parties());
  if (v.size() != shape.dim()) throw std::invalid_argument("permute_subsystems: size mismatch");
  std::vector<int> target_dims(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) target_dims[t] = shape.dim_of(perm[t]);
  const SystemShape target(target_dims);
  Vector<T> out(v.size());
  std::vector<int> tdigits(perm.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const std::vector<int> digits = shape.unravel(s);
    for (std::size_t t = 0; t < perm.size(); ++t) tdigits[t] = digits[static_cast<std::size_t>(perm[t])];
    out[target.ravel(tdigits)] = v[s];
  }
  return out;
}

/// Conjugate a square operator by the same subsystem reordering.
template <class T>
Matrix<T> permute_subsystems(const Matrix<T>& m, const SystemShape& shape,
                             const std::vector<int>& perm) {
  check_permutation(perm, shape.parties());
  if (!m.is_square() || m.rows() != shape.dim())
    throw std::invalid_argument("permute_subsystems: operator shape mismatch");
  std::vector<int> target_dims(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) target_dims[t] = shape.dim_of(perm[t]);
  const SystemShape target(target_dims);

  std::vector<std::size_t> map(m.rows());
  std::vector<int> tdigits(perm.size());
  for (std::size_t s = 0; s < m.rows(); ++s) {
    const std::vector<int> digits = shape.unravel(s);
    for (std::size_t t = 0; t < perm.size(); ++t) tdigits[t] = digits[static_cast<std::size_t>(perm[t])];
    map[s] = target.ravel(tdigits);
  }
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

// ---- partial trace -----------------------------------------------------------

/// Trace out every factor not listed in keep.  keep must be a non-empty,
/// strictly increasing list of factor indices; the output factor order is the
/// kept factors in that order.  Summation runs in flat index order, one
/// accumulation pass, so results are bit-deterministic.
template <class T>
Matrix<T> partial_trace(const Matrix<T>& rho, const SystemShape& shape,
                        const std::vector<int>& keep) {
  if (!rho.is_square() || rho.rows() != shape.dim())
    throw std::invalid_argument("partial_trace: operator does not match shape");
  if (keep.empty())
    throw std::invalid_argument("partial_trace: keep set must be non-empty (use trace())");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= shape.parties())
      throw std::invalid_argument("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
  }

  std::vector<int> traced;
  for (int i = 0; i < shape.parties(); ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);
  if (traced.empty()) return rho;

  const SystemShape keep_shape = shape.subset(keep);
  const SystemShape traced_shape = shape.subset(traced);
  const std::size_t dk = keep_shape.dim();
  const std::size_t dt = traced_shape.dim();

  std::vector<int> full(shape.parties());
  auto compose = [&](const std::vector<int>& kd, const std::vector<int>& td) {
    for (std::size_t i = 0; i < keep.size(); ++i) full[static_cast<std::size_t>(keep[i])] = kd[i];
    for (std::size_t i = 0; i < traced.size(); ++i) full[static_cast<std::size_t>(traced[i])] = td[i];
    return shape.ravel(full);
  };

  Matrix<T> out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    const std::vector<int> di = keep_shape.unravel(i);
    for (std::size_t j = 0; j < dk; ++j) {
      const std::vector<int> dj = keep_shape.unravel(j);
      T s{};
      for (std::size_t t = 0; t < dt; ++t) {
        const std::vector<int> dtr = traced_shape.unravel(t);
        s += rho(compose(di, dtr), compose(dj, dtr));
      }
      out(i, j) = s;
    }
  }
  return out;
}

// ---- rank --------------------------------------------------------------------

/// Numerical rank by Gaussian elimination with partial pivoting.
inline std::size_t matrix_rank(RealMatrix m, double tol = kTol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const double threshold = tol * std::max(1.0, max_abs(m));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) <= threshold) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace rqm

#endif  // REALQM_TENSOR_OPS_HPP_
