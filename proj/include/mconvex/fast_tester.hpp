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

// O(n^2) M-convexity deciders for instances whose infinity graph is a
// disjoint union of cliques, and the pipeline that routes an arbitrary
// instance to one of them.
//
//   Type I   normalise a_ij - b_i - b_j so every row minimum equals the
//            global minimum alpha, then test the result for the
//            anti-ultrametric property via its laminar decomposition.
//   Type II  adjacent 2x2 equalities on each block A_p x ([n] \ A_p).
//   Type III adjacent 2x2 equalities on each block A_p x A_q.
//
// Adjacent equalities imply the equality for every pair of rows and columns
// by telescoping, which is why a 2x2 sweep suffices.

#ifndef MCONVEX_FAST_TESTER_HPP_
#define MCONVEX_FAST_TESTER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mconvex/exec.hpp"
#include "mconvex/instance.hpp"
#include "mconvex/oracle.hpp"
#include "mconvex/structure.hpp"
#include "mconvex/verdict.hpp"

namespace mconvex {

// Raised when a decider's precondition turns out not to hold, e.g. an
// infinite coefficient in a block that Condition B says is finite.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct NormalizedMatrix {
  int n = 0;
  double alpha = 0.0;     // min_{i != j} a_ij
  std::vector<double> b;  // b_i = min_j a_ij - alpha >= 0
  SymmetricMatrix ahat;   // a_ij - b_i - b_j, +inf preserved
};

NormalizedMatrix normalize_type1(const QuadraticInstance& instance, Exec exec = Exec::kParallel);

bool check_anti_ultrametric(const NormalizedMatrix& normalized, const Tolerance& tol = {});

Verdict test_type1(const QuadraticInstance& instance, const Tolerance& tol = {}, Exec exec = Exec::kParallel);
Verdict test_type2(const QuadraticInstance& instance, const ComponentDecomposition& decomposition,
                   const Tolerance& tol = {}, Exec exec = Exec::kParallel);
Verdict test_type3(const QuadraticInstance& instance, const ComponentDecomposition& decomposition,
                   const Tolerance& tol = {}, Exec exec = Exec::kParallel);

struct Policy {
  // Treat a Condition B failure as proof of non-M-convexity.
  bool assume_condition_a = false;
  // Brute force is attempted only when C(n, r) is at most this.
  std::uint64_t brute_force_budget = kDefaultDomainBudget;
  // Attach a violated quadruple to negative fast-path verdicts (O(n^4)).
  bool explain = false;
  Tolerance tolerance;
  Exec exec = Exec::kParallel;
};

// Full decision pipeline:
//   r in {1, n-1}      every nonempty domain is M-convex; only emptiness is checked
//   Condition B fails  not M-convex if Condition A is assumed, otherwise
//                      brute force within budget, otherwise undecided
//   Condition B holds  |A_0| + m < r gives an empty domain (invalid_instance);
//                      otherwise Algorithm I, II or III by type
Verdict test_mconvexity(const QuadraticInstance& instance, const Policy& policy = {});

// Lexicographically first quadruple violating the condition that
// characterises M-convexity for `type`. Empty when none exists.
std::optional<QuadrupleViolation> find_violation_quadruple(const QuadraticInstance& instance,
                                                           const ComponentDecomposition& decomposition,
                                                           TypeClass type, const Tolerance& tol = {},
                                                           Exec exec = Exec::kParallel);

}  // namespace mconvex

#endif  // MCONVEX_FAST_TESTER_HPP_
