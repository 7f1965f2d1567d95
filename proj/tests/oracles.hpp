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

#ifndef REALQM_TESTS_ORACLES_HPP_
#define REALQM_TESTS_ORACLES_HPP_

// Independent reference implementations used to pin expected values.  These
// deliberately avoid the library's index machinery: plain scalar loops and
// digit arithmetic only, so they can disagree with the implementation when it
// is wrong.

#include <cstddef>
#include <vector>

#include "realqm/dense.hpp"

namespace rqm::test {

template <class T>
Matrix<T> kron_oracle(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

template <class T>
Vector<T> kron_oracle(const Vector<T>& a, const Vector<T>& b) {
  Vector<T> out(a.size() * b.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i / b.size()] * b[i % b.size()];
  return out;
}

/// Digits of `index` in the mixed radix given by dims, most significant first.
inline std::vector<int> digits_oracle(std::size_t index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % static_cast<std::size_t>(dims[i]));
    index /= static_cast<std::size_t>(dims[i]);
  }
  return out;
}

inline std::size_t index_oracle(const std::vector<int>& digits, const std::vector<int>& dims) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    index = index * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(digits[i]);
  return index;
}

/// Reorders the factors of a product-space vector by enumerating every basis
/// state explicitly; perm[t] is the source slot placed at target slot t.
template <class T>
Vector<T> permute_oracle(const Vector<T>& v, const std::vector<int>& dims,
                         const std::vector<int>& perm) {
  std::vector<int> target_dims(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t)
    target_dims[t] = dims[static_cast<std::size_t>(perm[t])];
  Vector<T> out(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const std::vector<int> source_digits = digits_oracle(s, dims);
    std::vector<int> target_digits(perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t)
      target_digits[t] = source_digits[static_cast<std::size_t>(perm[t])];
    out[index_oracle(target_digits, target_dims)] = v[s];
  }
  return out;
}

/// Partial trace over the first factor of a bipartite d1 x d2 split.
template <class T>
Matrix<T> trace_out_first_oracle(const Matrix<T>& rho, std::size_t d1, std::size_t d2) {
  Matrix<T> out(d2, d2);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      T s{};
      for (std::size_t i = 0; i < d1; ++i) s += rho(i * d2 + a, i * d2 + b);
      out(a, b) = s;
    }
  return out;
}

/// Partial trace over the second factor of a bipartite d1 x d2 split.
template <class T>
Matrix<T> trace_out_second_oracle(const Matrix<T>& rho, std::size_t d1, std::size_t d2) {
  Matrix<T> out(d1, d1);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b) {
      T s{};
      for (std::size_t j = 0; j < d2; ++j) s += rho(a * d2 + j, b * d2 + j);
      out(a, b) = s;
    }
  return out;
}

}  // namespace rqm::test

#endif  // REALQM_TESTS_ORACLES_HPP_
