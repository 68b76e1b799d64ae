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

// Brute-force ground truth straight from the definitions. Every routine
// enumerates the r-slice, so it is only usable for small n; the budget guards
// refuse rather than sample.

#ifndef MCONVEX_ORACLE_HPP_
#define MCONVEX_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mconvex/exec.hpp"
#include "mconvex/instance.hpp"
#include "mconvex/verdict.hpp"

namespace mconvex {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default cap on C(n, r), the number of slice points enumerated.
inline constexpr std::uint64_t kDefaultDomainBudget = 20'000;
// Cap on ordered pairs of domain points visited by the exchange checks.
inline constexpr std::uint64_t kMaxPairChecks = 100'000'000;

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// dom f as a lexicographically sorted list of r-subsets (0-based, sorted).
struct DomainSet {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> supports;
};

struct OracleOptions {
  Tolerance tolerance;
  std::uint64_t budget = kDefaultDomainBudget;
  Exec exec = Exec::kParallel;
};

// +inf when |support| != r or some pair inside it is infinite.
ExtendedValue evaluate(const QuadraticInstance& instance, std::span<const int> support);

// Throws BudgetExceeded when C(n, r) > budget.
DomainSet enumerate_domain(const QuadraticInstance& instance, std::uint64_t budget = kDefaultDomainBudget);

// Set exchange axiom over all ordered pairs; the violation is the first
// (x, y, i) in enumeration order.
CheckResult<ExchangeViolation> is_mconvex_set(const DomainSet& domain, Exec exec = Exec::kParallel);

// Valued exchange axiom: for all x, y in dom f and i in supp(x) \ supp(y)
// some j in supp(y) \ supp(x) has f(x) + f(y) >= f(x - e_i + e_j) + f(y + e_i - e_j).
// invalid_instance when dom f is empty. Throws BudgetExceeded.
Verdict exchange_axiom_holds(const QuadraticInstance& instance, const OracleOptions& options = {});

// dom f is an M-convex set and, for every pair x = z+i+j, y = z+k+l in dom f,
// f(x) + f(y) >= min(f(z+i+k) + f(z+j+l), f(z+i+l) + f(z+j+k)).
// Shares nothing with exchange_axiom_holds beyond evaluate().
Verdict local_exchange_holds(const QuadraticInstance& instance, const OracleOptions& options = {});

// Least-squares fit f(x) ~ alpha + sum_i p_i x_i over dom f with p_{n-1}
// pinned to 0 (sum x_i = r makes one degree of freedom redundant).
struct LinearFit {
  double alpha = 0.0;
  std::vector<double> p;
  double max_residual = 0.0;
};

// Throws BudgetExceeded, or std::invalid_argument when dom f is empty.
LinearFit fit_linear(const QuadraticInstance& instance, std::uint64_t budget = kDefaultDomainBudget);

// The fit, if its largest residual is below `threshold`.
std::optional<LinearFit> linear_certificate(const QuadraticInstance& instance,
                                            std::uint64_t budget = kDefaultDomainBudget, double threshold = 1e-9);

// Re-checks a witness against the instance by direct evaluation of the
// inequality, equality or adjacency pattern it claims to violate.
bool verify_witness(const QuadraticInstance& instance, const Witness& witness, const Tolerance& tol = {});

}  // namespace mconvex

#endif  // MCONVEX_ORACLE_HPP_
