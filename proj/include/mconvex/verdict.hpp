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

#ifndef MCONVEX_VERDICT_HPP_
#define MCONVEX_VERDICT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mconvex/value.hpp"

namespace mconvex {

enum class Status { kMConvex, kNotMConvex, kUndecided, kInvalidInstance };

// Classification by |A_0| + m against r.
enum class TypeClass { kType1, kType2, kType3, kDomEmpty };

std::string_view to_string(Status status);
std::string_view to_string(TypeClass type);  // "I", "II", "III", "dom_empty"

// Process exit code for a status: 0 m-convex, 1 not, 2 undecided, 3 invalid.
int exit_code(Status status);

// Points x, y of dom f and i in supp(x) \ supp(y) such that no j in
// supp(y) \ supp(x) satisfies f(x) + f(y) >= f(x - e_i + e_j) + f(y + e_i - e_j).
// For the set version of the axiom "satisfies" means both swaps stay in the set.
struct ExchangeViolation {
  std::vector<int> x;
  std::vector<int> y;
  int i = 0;
  bool set_only = false;  // set exchange property, values ignored
};

struct QuadrupleViolation {
  enum class Condition {
    kAntiTreeMetric,  // indices i<j<k<l; sums = {a_ij+a_kl, a_ik+a_jl, a_il+a_jk}; min attained once
    kType2Equality,   // i,k in one big component, j,l outside it; sums = {a_ij+a_kl, a_il+a_jk}
    kType3Equality,   // i,k in one big component, j,l in another; sums as for kType2Equality
  };
  Condition condition = Condition::kAntiTreeMetric;
  std::array<int, 4> indices{};
  std::vector<ExtendedValue> sums;
};

// {i,j} and {j,k} are infinite, {i,k} is finite: the component holding the
// path i-j-k is not a clique.
struct DomainViolation {
  std::array<int, 3> triple{};
};

using Witness = std::variant<ExchangeViolation, QuadrupleViolation, DomainViolation>;

// Outcome of a yes/no structural check that can explain a "no".
template <class Violation>
struct CheckResult {
  std::optional<Violation> violation;

  bool holds() const { return !violation.has_value(); }
  explicit operator bool() const { return holds(); }
};

struct Verdict {
  Status status = Status::kUndecided;
  std::optional<Witness> witness;
  std::string method;
  std::optional<TypeClass> type;
};

}  // namespace mconvex

#endif  // MCONVEX_VERDICT_HPP_
