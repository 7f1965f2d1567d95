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

#include "realqm/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "realqm/bellswap.hpp"
#include "realqm/complexqm.hpp"
#include "realqm/random.hpp"
#include "realqm/real_physics.hpp"
#include "realqm/realmap.hpp"
#include "realqm/tensor_ops.hpp"

namespace rqm {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ComplexState phase_times(const ComplexState& psi, double alpha) {
  ComplexVector v = psi.amplitudes();
  v *= cx(std::cos(alpha), std::sin(alpha));
  return ComplexState(std::move(v), psi.shape());
}

ComplexVector matvec(const ComplexOperator& a, const ComplexState& psi) {
  return a.matrix() * psi.amplitudes();
}

RealState real_image_of(const ComplexVector& v, const SystemShape& shape) {
  return RealState(real_part(v), imag_part(v), shape);
}

double compact_diff(const RealState& a, const RealState& b) {
  return std::max(max_abs_diff(a.re(), b.re()), max_abs_diff(a.im(), b.im()));
}

double compact_diff(const RealOperator& a, const RealOperator& b) {
  return std::max(max_abs_diff(a.re(), b.re()), max_abs_diff(a.im(), b.im()));
}

double compact_diff(const RealDensity& a, const RealDensity& b) {
  return std::max(max_abs_diff(a.re(), b.re()), max_abs_diff(a.im(), b.im()));
}

// Random complete projective ensemble from the column blocks of a random
// unitary.
std::vector<ComplexOperator> random_ensemble(Rng& rng, const SystemShape& shape) {
  const std::size_t d = shape.dim();
  const ComplexMatrix u = rng.unitary(shape).matrix();
  const std::size_t blocks = static_cast<std::size_t>(rng.uniform_int(2, static_cast<int>(d)));
  std::vector<std::size_t> cut{0};
  for (std::size_t b = 1; b < blocks; ++b)
    cut.push_back(static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d) - 1)));
  cut.push_back(d);
  std::sort(cut.begin(), cut.end());
  std::vector<ComplexOperator> out;
  for (std::size_t b = 0; b + 1 < cut.size(); ++b) {
    ComplexMatrix p(d, d);
    for (std::size_t k = cut[b]; k < cut[b + 1]; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
    out.emplace_back(std::move(p), shape, OperatorKind::projector);
  }
  return out;
}

struct Check {
  std::string name;
  std::function<CheckResult(const VerifyOptions&, std::uint64_t)> run;
};

CheckResult residual_result(const std::string& name, double residual, double tol,
                            const std::string& source) {
  return CheckResult{name, residual, 0.0, source, residual, residual <= tol};
}

const std::vector<Check>& registry() {
  using std::numbers::pi;
  static const std::vector<Check> checks = {
      {"norm_preservation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           worst = std::max(worst, std::abs(s_map(rng.state(shape)).norm() - 1.0));
         }
         return residual_result("norm_preservation", worst, o.tolerance,
                                "unit norm, exact identity");
       }},
      {"phase_covariance",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const double alpha = 2.0 * pi * rng.uniform();
           worst = std::max(worst, compact_diff(s_map(phase_times(psi, alpha)),
                                                apply_flag_rotation(s_map(psi), alpha)));
         }
         return residual_result("phase_covariance", worst, o.tolerance,
                                "flag rotation image of a global phase");
       }},
      {"flag_rotation_commutes",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const RealOperator a = t_map(rng.general(shape));
           const double alpha = 2.0 * pi * rng.uniform();
           const std::size_t d = shape.dim();
           const RealOperator rot(std::cos(alpha) * RealMatrix::identity(d),
                                  std::sin(alpha) * RealMatrix::identity(d), shape);
           worst = std::max(worst, compact_diff(compose(a, rot), compose(rot, a)));
         }
         return residual_result("flag_rotation_commutes", worst, o.tolerance,
                                "commutator vanishes");
       }},
      {"operator_homomorphism",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexOperator a = rng.general(shape);
           const ComplexOperator b = rng.general(shape);
           const ComplexOperator ab(a.matrix() * b.matrix(), shape, OperatorKind::general);
           worst = std::max(worst, compact_diff(t_map(ab), compose(t_map(a), t_map(b))));
         }
         return residual_result("operator_homomorphism", worst, o.tolerance,
                                "image of product equals product of images");
       }},
      {"expectation_preservation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const ComplexOperator h = rng.hermitian(shape);
           worst = std::max(worst, std::abs(real_expectation(s_map(psi), t_map(h)) -
                                            expectation(psi, h)));
         }
         return residual_result("expectation_preservation", worst, o.tolerance,
                                "complex oracle expectation");
       }},
      {"intertwining",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const ComplexOperator a = rng.general(shape);
           worst = std::max(worst, compact_diff(t_apply(t_map(a), s_map(psi)),
                                                real_image_of(matvec(a, psi), shape)));
         }
         return residual_result("intertwining", worst, o.tolerance,
                                "operator action commutes with the state map");
       }},
      {"scalar_product_rule",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState phi = rng.state(shape);
           const ComplexState psi = rng.state(shape);
           const double expected = dot(phi.amplitudes(), psi.amplitudes()).real();
           worst = std::max(worst, std::abs(real_overlap(s_map(phi), s_map(psi)) - expected));
         }
         return residual_result("scalar_product_rule", worst, o.tolerance,
                                "real part of the complex inner product");
       }},
      {"hermitian_to_symmetric",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         const int trials = std::max(1, o.trials / 10);  // expanded matrices, keep it bounded
         for (int t = 0; t < trials; ++t) {
           const SystemShape shape = rng.shape();
           const RealMatrix m = t_map(rng.hermitian(shape)).expanded();
           worst = std::max(worst, max_abs_diff(m, m.transpose()));
         }
         return residual_result("hermitian_to_symmetric", worst, o.tolerance,
                                "expanded image is symmetric");
       }},
      {"unitary_to_orthogonal",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         const int trials = std::max(1, o.trials / 10);
         for (int t = 0; t < trials; ++t) {
           const SystemShape shape = rng.shape();
           const RealMatrix m = t_map(rng.unitary(shape)).expanded();
           const RealMatrix gram = m * m.transpose();
           worst = std::max(
               worst, max_abs_diff(gram, t_map(identity_operator(shape)).expanded()));
         }
         return residual_result("unitary_to_orthogonal", worst, o.tolerance,
                                "gram matrix equals the canonical-subspace identity");
       }},
      {"flag_basis_composition",
       [](const VerifyOptions& o, std::uint64_t) {
         double worst = 0;
         constexpr std::pair<int, int> splits[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
         for (auto [n, m] : splits)
           worst = std::max(worst, compose_flag_basis_check(n, m).max_residual);
         return residual_result("flag_basis_composition", worst, o.tolerance,
                                "split/compose identities for the flag basis");
       }},
      {"flag_trace_reduction",
       [](const VerifyOptions& o, std::uint64_t) {
         double worst = 0;
         for (int n = 2; n <= 4; ++n) {
           const FlagBasis& fn = flag_basis(n);
           const SystemShape flags(std::vector<int>(static_cast<std::size_t>(n), 2));
           for (int m = 1; m <= std::min(2, n - 1); ++m) {
             std::vector<int> keep;
             for (int i = m; i < n; ++i) keep.push_back(i);
             const FlagBasis& fr = flag_basis(n - m);
             worst = std::max(worst, max_abs_diff(partial_trace(fn.i_op, flags, keep), fr.i_op));
             worst = std::max(worst, max_abs_diff(partial_trace(fn.j_op, flags, keep), fr.j_op));
           }
         }
         return residual_result("flag_trace_reduction", worst, o.tolerance,
                                "flag projectors reduce under the partial trace");
       }},
      {"partial_trace_diagram",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < std::max(1, o.trials / 4); ++t) {
           const int parties = rng.uniform_int(2, 3);
           const SystemShape shape = [&] {
             std::vector<int> dims(static_cast<std::size_t>(parties));
             for (auto& d : dims) d = 2;
             return SystemShape(dims);
           }();
           // Alternate product and entangled inputs.
           ComplexOperator rho = [&] {
             if (t % 2 == 0) {
               ComplexMatrix m = rng.density(SystemShape({2})).matrix();
               for (int i = 1; i < parties; ++i)
                 m = kron(m, rng.density(SystemShape({2})).matrix());
               return ComplexOperator(std::move(m), shape, OperatorKind::density);
             }
             return rng.density(shape);
           }();
           std::vector<int> keep;
           for (int i = 0; i < parties; ++i)
             if (rng.uniform() < 0.5) keep.push_back(i);
           if (keep.empty()) keep.push_back(rng.uniform_int(0, parties - 1));
           if (static_cast<int>(keep.size()) == parties) keep.pop_back();
           const ComplexOperator reduced(partial_trace(rho.matrix(), shape, keep),
                                         shape.subset(keep), OperatorKind::density);
           worst = std::max(worst,
                            compact_diff(real_partial_trace(t1_map(rho), keep), t1_map(reduced)));
         }
         return residual_result("partial_trace_diagram", worst, o.tolerance,
                                "reduction commutes with the density map");
       }},
      {"p4_locality",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape s1({rng.uniform_int(2, 3)});
           const SystemShape s2({rng.uniform_int(2, 3)});
           const SystemShape total = s1.concat(s2);
           const ComplexState psi1 = rng.state(s1);
           const ComplexState psi2 = rng.state(s2);
           const ComplexOperator a1 = rng.general(s1);
           const ComplexOperator a2 = rng.general(s2);
           const RealState prep = independent_prep({s_map(psi1), s_map(psi2)});
           const RealState lhs1 = t_apply(embed_local(t_map(a1), total, 0), prep);
           const RealState rhs1 =
               flag_tensor_states(real_image_of(matvec(a1, psi1), s1), s_map(psi2));
           const RealState lhs2 = t_apply(embed_local(t_map(a2), total, 1), prep);
           const RealState rhs2 =
               flag_tensor_states(s_map(psi1), real_image_of(matvec(a2, psi2), s2));
           worst = std::max({worst, compact_diff(lhs1, rhs1), compact_diff(lhs2, rhs2)});
         }
         return residual_result("p4_locality", worst, o.tolerance,
                                "local action factors through the preparation");
       }},
      {"quotient_consistency",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < std::max(1, o.trials / 2); ++t) {
           const SystemShape s1 = rng.shape(2);
           const SystemShape s2 = rng.shape(1);
           const ComplexState psi1 = rng.state(s1);
           const ComplexState psi2 = rng.state(s2);
           const RealVector joint = kron(s_map(psi1).expanded(), s_map(psi2).expanded());
           // Source order (mains1, flags1, mains2, flags2) -> grouped.
           const int n1 = s1.parties(), n2 = s2.parties();
           std::vector<int> source_dims;
           for (int d : s1.dims()) source_dims.push_back(d);
           source_dims.insert(source_dims.end(), static_cast<std::size_t>(n1), 2);
           for (int d : s2.dims()) source_dims.push_back(d);
           source_dims.insert(source_dims.end(), static_cast<std::size_t>(n2), 2);
           std::vector<int> perm;
           for (int i = 0; i < n1; ++i) perm.push_back(i);
           for (int i = 0; i < n2; ++i) perm.push_back(2 * n1 + i);
           for (int i = 0; i < n1; ++i) perm.push_back(n1 + i);
           for (int i = 0; i < n2; ++i) perm.push_back(2 * n1 + n2 + i);
           const RealVector grouped =
               permute_subsystems(joint, SystemShape(source_dims), perm);
           const RealState canonical = canonicalize(grouped, s1.concat(s2));
           const RealState direct = s_map(tensor(psi1, psi2));
           worst = std::max(worst, compact_diff(canonical, direct));
         }
         return residual_result("quotient_consistency", worst, o.tolerance,
                                "canonicalized product equals image of the complex product");
       }},
      {"kernel_structure",
       [](const VerifyOptions& o, std::uint64_t) {
         const SystemShape shape({2, 2});
         const RealMatrix p = kernel_projector(shape);
         double worst = std::abs(static_cast<double>(matrix_rank(p)) - 8.0);
         // Kernel basis: any main vector times (|00>+|11>) or (|01>-|10>).
         const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
         RealVector k1(4), k2(4);
         k1[0] = inv_sqrt2;
         k1[3] = inv_sqrt2;
         k2[1] = inv_sqrt2;
         k2[2] = -inv_sqrt2;
         RealMatrix span(8, 16);
         std::size_t row = 0;
         for (std::size_t i = 0; i < 4; ++i)
           for (const RealVector* k : {&k1, &k2}) {
             const RealVector v = kron(RealVector::basis(4, i), *k);
             const RealVector image = p * v;
             worst = std::max(worst, image.norm());
             for (std::size_t c = 0; c < 16; ++c) span(row, c) = v[c];
             ++row;
           }
         worst = std::max(worst, std::abs(static_cast<double>(matrix_rank(span)) - 8.0));
         const SystemShape shape3({2, 2, 2});
         const RealMatrix p3 = kernel_projector(shape3);
         worst = std::max(worst, std::abs(static_cast<double>(matrix_rank(p3)) - 16.0));
         worst = std::max(
             worst, std::abs(static_cast<double>(matrix_rank(RealMatrix::identity(64) - p3)) -
                             48.0));
         return residual_result("kernel_structure", worst, o.tolerance,
                                "rank 2D with the stated kernel span");
       }},
      {"myrheim_agreement",
       [](const VerifyOptions& o, std::uint64_t) {
         double worst = 0;
         for (const SystemShape& shape :
              {SystemShape({2, 2}), SystemShape({2, 2, 2}), SystemShape({3, 3})})
           worst = std::max(worst, myrheim_projector(shape).second.max_residual);
         return residual_result("myrheim_agreement", worst, o.tolerance,
                                "local-J projector equals the kernel projector");
       }},
      {"j_squared",
       [](const VerifyOptions& o, std::uint64_t) {
         double worst = 0;
         for (int n = 1; n <= 4; ++n) {
           const FlagBasis& fb = flag_basis(n);
           worst = std::max(worst, max_abs_diff(fb.j_op * fb.j_op, -1.0 * fb.i_op));
         }
         return residual_result("j_squared", worst, o.tolerance,
                                "flag J squares to minus the flag projector");
       }},
      {"born_rule_differential",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const std::size_t rank =
               static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(shape.dim())));
           const ComplexOperator proj = rng.projector(shape, rank);
           worst = std::max(worst, std::abs(real_born(s_map(psi), t_map(proj)) -
                                            born_probability(psi, proj)));
         }
         return residual_result("born_rule_differential", worst, o.tolerance,
                                "complex oracle Born probability");
       }},
      {"born_completeness",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < std::max(1, o.trials / 2); ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const auto projs = random_ensemble(rng, shape);
           double total_c = 0, total_r = 0;
           for (const auto& proj : projs) {
             total_c += born_probability(psi, proj);
             total_r += real_born(s_map(psi), t_map(proj));
           }
           worst = std::max({worst, std::abs(total_c - 1.0), std::abs(total_r - 1.0)});
         }
         return residual_result("born_completeness", worst, o.tolerance,
                                "probabilities over an ensemble sum to 1");
       }},
      {"collapse_normalized",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < std::max(1, o.trials / 2); ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const auto projs = random_ensemble(rng, shape);
           std::vector<std::string> labels;
           for (std::size_t i = 0; i < projs.size(); ++i) labels.push_back(std::to_string(i));
           const MeasurementEnsemble ens(projs, labels);
           for (std::size_t r = 0; r < ens.outcomes(); ++r) {
             if (born_probability(psi, ens.projectors()[r]) < 1e-6) continue;
             const auto [p, collapsed] = measure_and_collapse(psi, ens, r);
             worst = std::max(worst, std::abs(collapsed.amplitudes().norm() - 1.0));
           }
         }
         return residual_result("collapse_normalized", worst, o.tolerance,
                                "post-measurement states are unit vectors");
       }},
      {"projector_expectation_range",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexState psi = rng.state(shape);
           const std::size_t rank =
               static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(shape.dim())));
           const double e = expectation(psi, rng.projector(shape, rank));
           worst = std::max({worst, -e, e - 1.0, 0.0});
         }
         return residual_result("projector_expectation_range", worst, o.tolerance,
                                "projector expectations stay in [0, 1]");
       }},
      {"density_trace_preservation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           worst = std::max(worst, std::abs(t1_map(rng.density(shape)).physical_trace() - 1.0));
         }
         return residual_result("density_trace_preservation", worst, o.tolerance,
                                "density images keep unit trace");
       }},
      {"density_expectation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape();
           const ComplexOperator rho = rng.density(shape);
           const ComplexOperator h = rng.hermitian(shape);
           const double expected = (rho.matrix() * h.matrix()).trace().real();
           worst = std::max(worst, std::abs(real_density_expectation(t1_map(rho), t_map(h)) -
                                            expected));
         }
         return residual_result("density_expectation", worst, o.tolerance,
                                "complex oracle trace expectation");
       }},
      {"independent_prep_consistency",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const int parties = rng.uniform_int(2, 3);
           std::vector<ComplexState> states;
           std::vector<RealState> images;
           for (int i = 0; i < parties; ++i) {
             states.push_back(rng.state(SystemShape({rng.uniform_int(2, 3)})));
             images.push_back(s_map(states.back()));
           }
           ComplexState product = states[0];
           for (int i = 1; i < parties; ++i) product = tensor(product, states[i]);
           worst = std::max(worst, compact_diff(independent_prep(images), s_map(product)));
           // A relative phase split across two factors is invisible jointly.
           const double alpha = 2.0 * pi * rng.uniform();
           std::vector<RealState> shifted = images;
           shifted[0] = s_map(phase_times(states[0], alpha));
           shifted[1] = s_map(phase_times(states[1], -alpha));
           worst = std::max(worst,
                            compact_diff(independent_prep(shifted), independent_prep(images)));
         }
         return residual_result("independent_prep_consistency", worst, o.tolerance,
                                "image of the complex tensor product");
       }},
      {"local_embedding_product",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape s1({rng.uniform_int(2, 3)});
           const SystemShape s2({rng.uniform_int(2, 3)});
           const SystemShape total = s1.concat(s2);
           const RealOperator a1 = t_map(rng.general(s1));
           const RealOperator a2 = t_map(rng.general(s2));
           const RealOperator joint =
               compose(embed_local(a1, total, 0), embed_local(a2, total, 1));
           worst = std::max(worst, compact_diff(joint, flag_tensor_ops(a1, a2)));
         }
         return residual_result("local_embedding_product", worst, o.tolerance,
                                "disjoint embeddings compose to the joint operator");
       }},
      {"equivalence_relation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double failures = 0;
         const SystemShape shape({2, 2});
         const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
         RealVector k1(4), k2(4);
         k1[0] = inv_sqrt2;
         k1[3] = inv_sqrt2;
         k2[1] = inv_sqrt2;
         k2[2] = -inv_sqrt2;
         for (int t = 0; t < o.trials; ++t) {
           const RealVector v = s_map(rng.state(shape)).expanded();
           RealVector kernel_elem(16);
           for (std::size_t i = 0; i < 4; ++i) {
             kernel_elem += rng.uniform_symmetric() * kron(RealVector::basis(4, i), k1);
             kernel_elem += rng.uniform_symmetric() * kron(RealVector::basis(4, i), k2);
           }
           if (!equivalent(v, v + kernel_elem, shape)) failures += 1;
           RealVector canonical_shift =
               1e-3 * kron(RealVector::basis(4, static_cast<std::size_t>(rng.uniform_int(0, 3))),
                           flag_basis(2).psi_even);
           if (equivalent(v, v + canonical_shift, shape)) failures += 1;
         }
         return CheckResult{"equivalence_relation", failures, 0.0,
                            "kernel shifts are invisible, canonical shifts are not", failures,
                            failures == 0};
       }},
      {"kron_properties",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const std::size_t da = static_cast<std::size_t>(rng.uniform_int(2, 3));
           const std::size_t db = static_cast<std::size_t>(rng.uniform_int(2, 3));
           const std::size_t dc = static_cast<std::size_t>(rng.uniform_int(2, 3));
           ComplexMatrix a(da, da), a2(da, da), b(db, db), c(dc, dc);
           for (auto& x : a.data()) x = rng.complex_entry();
           for (auto& x : a2.data()) x = rng.complex_entry();
           for (auto& x : b.data()) x = rng.complex_entry();
           for (auto& x : c.data()) x = rng.complex_entry();
           worst = std::max(worst, max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))));
           const cx s = rng.complex_entry(), u = rng.complex_entry();
           const ComplexMatrix mixed = a * s + a2 * u;
           const ComplexMatrix expanded = kron(a, c) * s + kron(a2, c) * u;
           worst = std::max(worst, max_abs_diff(kron(mixed, c), expanded));
         }
         return residual_result("kron_properties", worst, o.tolerance,
                                "associativity and bilinearity");
       }},
      {"permutation_roundtrip",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           const SystemShape shape = rng.shape(4);
           ComplexVector v(shape.dim());
           for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.complex_entry();
           std::vector<int> perm(static_cast<std::size_t>(shape.parties()));
           for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
           for (std::size_t i = perm.size(); i > 1; --i)
             std::swap(perm[i - 1], perm[static_cast<std::size_t>(
                                        rng.uniform_int(0, static_cast<int>(i) - 1))]);
           std::vector<int> permuted_dims(perm.size());
           for (std::size_t i = 0; i < perm.size(); ++i)
             permuted_dims[i] = shape.dim_of(perm[i]);
           const ComplexVector forward = permute_subsystems(v, shape, perm);
           const ComplexVector back = permute_subsystems(forward, SystemShape(permuted_dims),
                                                         inverse_permutation(perm));
           worst = std::max(worst, max_abs_diff(back, v));
         }
         return residual_result("permutation_roundtrip", worst, o.tolerance,
                                "a permutation composed with its inverse is the identity");
       }},
      {"trace_preservation",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < o.trials; ++t) {
           SystemShape shape = rng.shape(3);
           while (shape.parties() < 2) shape = rng.shape(3);
           const ComplexOperator h = rng.hermitian(shape);
           std::vector<int> keep;
           for (int i = 0; i < shape.parties(); ++i)
             if (rng.uniform() < 0.5) keep.push_back(i);
           if (keep.empty()) keep.push_back(0);
           const cx traced = partial_trace(h.matrix(), shape, keep).trace();
           worst = std::max(worst, std::abs(traced - h.matrix().trace()));
         }
         return residual_result("trace_preservation", worst, o.tolerance,
                                "partial trace preserves the total trace");
       }},
      {"t_inv_roundtrip",
       [](const VerifyOptions& o, std::uint64_t seed) {
         Rng rng(seed);
         double worst = 0;
         for (int t = 0; t < std::max(1, o.trials / 10); ++t) {
           const SystemShape shape = rng.shape(2);
           const ComplexOperator a = rng.general(shape);
           worst = std::max(worst, max_abs_diff(t_inv_left(t_map(a)).matrix(), a.matrix()));
           worst = std::max(
               worst, max_abs_diff(t_inv_left_expanded(t_map(a).expanded(), shape), a.matrix()));
         }
         return residual_result("t_inv_roundtrip", worst, o.tolerance,
                                "left inverse recovers the complex operator");
       }},
      {"bell_backend_equivalence",
       [](const VerifyOptions& o, std::uint64_t) {
         const ExperimentSpec spec = default_spec();
         const ProbabilityTable pc = probability_table(spec, Backend::complex_qm);
         const ProbabilityTable pr = probability_table(spec, Backend::real_qm);
         double worst = 0;
         for (int x = 0; x < 3; ++x)
           for (int z = 0; z < 6; ++z)
             for (int a = 0; a < 2; ++a)
               for (int b = 0; b < 4; ++b)
                 for (int c = 0; c < 2; ++c)
                   worst = std::max(worst, std::abs(pc.p(a, b, c, x, z) - pr.p(a, b, c, x, z)));
         return residual_result("bell_backend_equivalence", worst, o.tolerance,
                                "complex and real probability tables agree");
       }},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.name);
  return names;
}

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("verification: trials must be >= 1");
  if (options.tolerance <= 0) throw std::invalid_argument("verification: tolerance must be > 0");
  std::vector<CheckResult> results;
  if (!options.checks.empty()) {
    const auto names = verification_check_names();
    for (const auto& want : options.checks)
      if (std::find(names.begin(), names.end(), want) == names.end())
        throw std::invalid_argument("verification: unknown check '" + want + "'");
  }
  for (const auto& check : registry()) {
    if (!options.checks.empty() &&
        std::find(options.checks.begin(), options.checks.end(), check.name) ==
            options.checks.end())
      continue;
    results.push_back(check.run(options, options.seed ^ fnv1a(check.name)));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace rqm
