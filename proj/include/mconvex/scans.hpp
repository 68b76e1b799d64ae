// Copyright 2026 The mconvex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Direct scans of the quadruple and triple conditions over their full
// quantifier ranges. These are the slow references the O(n^2) deciders are
// checked against, and the source of explain-mode witnesses. Each returns the
// first violation in lexicographic order of the reported indices; the
// parallel kernels return the same one.

#ifndef MCONVEX_SCANS_HPP_
#define MCONVEX_SCANS_HPP_

#include <array>
#include <optional>

#include "mconvex/exec.hpp"
#include "mconvex/instance.hpp"
#include "mconvex/structure.hpp"
#include "mconvex/verdict.hpp"

namespace mconvex {

// a_ij + a_kl >= min(a_ik + a_jl, a_il + a_jk) for every ordering of every
// 4-set; equivalently, among the three pairings of {i<j<k<l} the smallest sum
// is attained at least twice. O(n^4).
std::optional<QuadrupleViolation> scan_anti_tree_metric(const SymmetricMatrix& a, const Tolerance& tol = {},
                                                        Exec exec = Exec::kParallel);

// a_ij + a_kl == a_il + a_jk for i < k in one big component and j < l
// outside it.
std::optional<QuadrupleViolation> scan_type2_equalities(const SymmetricMatrix& a,
                                                        const ComponentDecomposition& decomposition,
                                                        const Tolerance& tol = {}, Exec exec = Exec::kParallel);

// The same equality for i < k in one big component and j < l in another.
std::optional<QuadrupleViolation> scan_type3_equalities(const SymmetricMatrix& a,
                                                        const ComponentDecomposition& decomposition,
                                                        const Tolerance& tol = {}, Exec exec = Exec::kParallel);

// First (i < j, k) with a_ij < min(a_ik, a_jk). O(n^3).
std::optional<std::array<int, 3>> scan_anti_ultrametric(const SymmetricMatrix& a, const Tolerance& tol = {},
                                                        Exec exec = Exec::kParallel);

}  // namespace mconvex

#endif  // MCONVEX_SCANS_HPP_
