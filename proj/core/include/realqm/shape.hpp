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

#ifndef REALQM_SHAPE_HPP_
#define REALQM_SHAPE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqm {

/// Ordered list of local dimensions of a multipartite system.
///
/// Index convention is big-endian: the first factor varies slowest, so the
/// product basis state |k1 k2 ... kN> has flat index ((k1*d2 + k2)*d3 + ...).
/// Local dimensions are heterogeneous; each must be at least 2.
class SystemShape {
 public:
  explicit SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("SystemShape: no subsystems");
    for (int d : dims_) {
      if (d < 2) throw std::invalid_argument("SystemShape: local dimension must be >= 2");
    }
  }

  int parties() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int dim_of(int i) const { return dims_.at(static_cast<std::size_t>(i)); }

  /// Total main dimension D = prod(dims).
  std::size_t dim() const {
    std::size_t d = 1;
    for (int x : dims_) d *= static_cast<std::size_t>(x);
    return d;
  }

  /// Dimension of the joint flag space, 2^N.
  std::size_t flag_dim() const { return std::size_t{1} << parties(); }

  /// Dimension of the full real carrier space, D * 2^N.
  std::size_t expanded_dim() const { return dim() * flag_dim(); }

  SystemShape concat(const SystemShape& other) const {
    std::vector<int> ds = dims_;
    ds.insert(ds.end(), other.dims_.begin(), other.dims_.end());
    return SystemShape(std::move(ds));
  }

  SystemShape subset(const std::vector<int>& keep) const {
    std::vector<int> ds;
    ds.reserve(keep.size());
    for (int i : keep) ds.push_back(dim_of(i));
    return SystemShape(std::move(ds));
  }

  std::vector<int> unravel(std::size_t index) const {
    std::vector<int> digits(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      const auto d = static_cast<std::size_t>(dims_[i]);
      digits[i] = static_cast<int>(index % d);
      index /= d;
    }
    return digits;
  }

  std::size_t ravel(const std::vector<int>& digits) const {
    if (digits.size() != dims_.size()) throw std::invalid_argument("ravel: digit count mismatch");
    std::size_t index = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (digits[i] < 0 || digits[i] >= dims_[i])
        throw std::invalid_argument("ravel: digit out of range");
      index = index * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(digits[i]);
    }
    return index;
  }

  bool operator==(const SystemShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const SystemShape& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(dims_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> dims_;
};

}  // namespace rqm

#endif  // REALQM_SHAPE_HPP_
