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

#include <benchmark/benchmark.h>

#include "realqm/realqm.hpp"

namespace {

using namespace rqm;

void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  ComplexMatrix a(n, n), b(n, n);
  for (auto& x : a.data()) x = rng.complex_entry();
  for (auto& x : b.data()) x = rng.complex_entry();
  for (auto _ : state) {
    auto k = kron(a, b);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_kron)->Arg(4)->Arg(8)->Arg(16);

void BM_flag_tensor_ops(benchmark::State& state) {
  Rng rng(2);
  const SystemShape s1({2, 2}), s2({2, 2});
  const RealOperator a = t_map(rng.general(s1));
  const RealOperator b = t_map(rng.general(s2));
  for (auto _ : state) {
    auto joint = flag_tensor_ops(a, b);
    benchmark::DoNotOptimize(joint);
  }
}
BENCHMARK(BM_flag_tensor_ops);

void BM_probability_table_complex(benchmark::State& state) {
  const ExperimentSpec spec = default_spec();
  for (auto _ : state) {
    auto table = probability_table(spec, Backend::complex_qm);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_probability_table_complex);

void BM_probability_table_real(benchmark::State& state) {
  const ExperimentSpec spec = default_spec();
  for (auto _ : state) {
    auto table = probability_table(spec, Backend::real_qm);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_probability_table_real);

void BM_real_partial_trace(benchmark::State& state) {
  Rng rng(3);
  const SystemShape shape({2, 2, 2});
  const RealDensity rho = t1_map(rng.density(shape));
  for (auto _ : state) {
    auto reduced = real_partial_trace(rho, {0, 2});
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_real_partial_trace);

void BM_kernel_projector(benchmark::State& state) {
  const SystemShape shape({2, 2, 2});
  for (auto _ : state) {
    auto p = kernel_projector(shape);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_kernel_projector);

}  // namespace
