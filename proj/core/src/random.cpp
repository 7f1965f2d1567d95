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

#include "realqm/random.hpp"

#include <cmath>
#include <stdexcept>

namespace rqm {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_symmetric() { return 2.0 * uniform() - 1.0; }

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

cx Rng::complex_entry() {
  const double re = uniform_symmetric();
  const double im = uniform_symmetric();
  return cx(re, im);
}

ComplexVector Rng::vector(std::size_t dim) {
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = complex_entry();
  return v;
}

ComplexState Rng::state(const SystemShape& shape) {
  ComplexVector v = vector(shape.dim());
  const double n = v.norm();
  if (n < 1e-6) return state(shape);  // vanishing draw, retry
  v *= cx{1.0 / n};
  return ComplexState(std::move(v), shape);
}

ComplexOperator Rng::general(const SystemShape& shape) {
  const std::size_t d = shape.dim();
  ComplexMatrix m(d, d);
  for (auto& x : m.data()) x = complex_entry();
  return ComplexOperator(std::move(m), shape, OperatorKind::general);
}

ComplexOperator Rng::hermitian(const SystemShape& shape) {
  const std::size_t d = shape.dim();
  ComplexMatrix g(d, d);
  for (auto& x : g.data()) x = complex_entry();
  ComplexMatrix h = g + adjoint(g);
  h *= cx{0.5};
  return ComplexOperator(std::move(h), shape, OperatorKind::hermitian);
}

ComplexOperator Rng::unitary(const SystemShape& shape) {
  // Modified Gram-Schmidt on a random square matrix; columns become an
  // orthonormal frame.
  const std::size_t d = shape.dim();
  std::vector<ComplexVector> cols;
  cols.reserve(d);
  while (cols.size() < d) {
    ComplexVector v = vector(d);
    for (const auto& u : cols) {
      const cx c = dot(u, v);
      for (std::size_t i = 0; i < d; ++i) v[i] -= c * u[i];
    }
    const double n = v.norm();
    if (n < 1e-6) continue;  // nearly dependent draw, retry
    v *= cx{1.0 / n};
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) u(i, j) = cols[j][i];
  return ComplexOperator(std::move(u), shape, OperatorKind::unitary);
}

ComplexOperator Rng::density(const SystemShape& shape) {
  const std::size_t d = shape.dim();
  ComplexMatrix g(d, d);
  for (auto& x : g.data()) x = complex_entry();
  ComplexMatrix rho = g * adjoint(g);
  const double tr = rho.trace().real();
  rho *= cx{1.0 / tr};
  return ComplexOperator(std::move(rho), shape, OperatorKind::density);
}

ComplexOperator Rng::projector(const SystemShape& shape, std::size_t rank) {
  const std::size_t d = shape.dim();
  if (rank > d) throw std::invalid_argument("projector: rank exceeds dimension");
  const ComplexMatrix u = unitary(shape).matrix();
  ComplexMatrix p(d, d);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
  return ComplexOperator(std::move(p), shape, OperatorKind::projector);
}

SystemShape Rng::shape(int max_parties) {
  const int n = uniform_int(1, max_parties);
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (auto& d : dims) d = uniform_int(2, 3);
  return SystemShape(std::move(dims));
}

}  // namespace rqm
