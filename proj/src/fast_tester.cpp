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

#include "mconvex/fast_tester.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mconvex/laminar.hpp"
#include "mconvex/scans.hpp"

namespace mconvex {

NormalizedMatrix normalize_type1(const QuadraticInstance& instance, Exec exec) {
  const int n = instance.n();
  const auto& a = instance.quad();
  const bool parallel = exec == Exec::kParallel && n >= kParallelMinRows;

  std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n; ++i) {
    const auto row = a.row(i);
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j != i) m = std::min(m, row[j].value());
    }
    row_min[i] = m;
  }
  for (int i = 0; i < n; ++i) {
    if (row_min[i] == std::numeric_limits<double>::infinity()) {
      throw InternalInconsistency("normalize_type1: row " + std::to_string(i + 1) + " has no finite coefficient");
    }
  }

  NormalizedMatrix out;
  out.n = n;
  out.alpha = *std::min_element(row_min.begin(), row_min.end());
  out.b.resize(n);
  for (int i = 0; i < n; ++i) out.b[i] = row_min[i] - out.alpha;
  out.ahat = SymmetricMatrix(n);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.ahat.set(i, j, a(i, j) - (out.b[i] + out.b[j]));
  }
  return out;
}

bool check_anti_ultrametric(const NormalizedMatrix& normalized, const Tolerance& tol) {
  return check_anti_ultrametric(normalized.ahat, normalized.alpha, tol);
}

Verdict test_type1(const QuadraticInstance& instance, const Tolerance& tol, Exec exec) {
  const NormalizedMatrix normalized = normalize_type1(instance, exec);
  Verdict v;
  v.method = "algorithm-I";
  v.type = TypeClass::kType1;
  v.status = check_anti_ultrametric(normalized, tol) ? Status::kMConvex : Status::kNotMConvex;
  return v;
}

namespace {

// Adjacent 2x2 equalities a[r_t][c_s] + a[r_t+1][c_s+1] == a[r_t+1][c_s] + a[r_t][c_s+1]
// on the block rows x cols.
bool adjacent_equalities_hold(const SymmetricMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols,
                              const Tolerance& tol, Exec exec) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  bool ok = true;
  bool infinite = false;
#pragma omp parallel for schedule(static) reduction(&& : ok) reduction(|| : infinite) \
    if (exec == Exec::kParallel && nr >= kParallelMinRows)
  for (int t = 0; t < nr - 1; ++t) {
    const auto top = a.row(rows[t]);
    const auto bottom = a.row(rows[t + 1]);
    for (int s = 0; s + 1 < nc; ++s) {
      const ExtendedValue v00 = top[cols[s]], v01 = top[cols[s + 1]];
      const ExtendedValue v10 = bottom[cols[s]], v11 = bottom[cols[s + 1]];
      if (v00.is_infinite() || v01.is_infinite() || v10.is_infinite() || v11.is_infinite()) {
        infinite = true;
        continue;
      }
      ok = ok && tol.equal(v00 + v11, v10 + v01);
    }
  }
  if (infinite) throw InternalInconsistency("infinite coefficient between distinct components");
  return ok;
}

}  // namespace

Verdict test_type2(const QuadraticInstance& instance, const ComponentDecomposition& decomposition,
                   const Tolerance& tol, Exec exec) {
  const int n = instance.n();
  bool ok = true;
  for (std::size_t p = 0; p < decomposition.big.size() && ok; ++p) {
    const auto& rows = decomposition.big[p];
    std::vector<int> cols;
    cols.reserve(n - rows.size());
    for (int v = 0; v < n; ++v) {
      if (decomposition.component_of[v] != static_cast<int>(p)) cols.push_back(v);
    }
    ok = adjacent_equalities_hold(instance.quad(), rows, cols, tol, exec);
  }
  Verdict v;
  v.method = "algorithm-II";
  v.type = TypeClass::kType2;
  v.status = ok ? Status::kMConvex : Status::kNotMConvex;
  return v;
}

Verdict test_type3(const QuadraticInstance& instance, const ComponentDecomposition& decomposition,
                   const Tolerance& tol, Exec exec) {
  bool ok = true;
  // The (A_q, A_p) block is the transpose of (A_p, A_q) and gives the same
  // equalities, so unordered pairs suffice.
  for (std::size_t p = 0; p < decomposition.big.size() && ok; ++p) {
    for (std::size_t q = p + 1; q < decomposition.big.size() && ok; ++q) {
      ok = adjacent_equalities_hold(instance.quad(), decomposition.big[p], decomposition.big[q], tol, exec);
    }
  }
  Verdict v;
  v.method = "algorithm-III";
  v.type = TypeClass::kType3;
  v.status = ok ? Status::kMConvex : Status::kNotMConvex;
  return v;
}

std::optional<QuadrupleViolation> find_violation_quadruple(const QuadraticInstance& instance,
                                                           const ComponentDecomposition& decomposition,
                                                           TypeClass type, const Tolerance& tol, Exec exec) {
  switch (type) {
    case TypeClass::kType1: return scan_anti_tree_metric(instance.quad(), tol, exec);
    case TypeClass::kType2: return scan_type2_equalities(instance.quad(), decomposition, tol, exec);
    case TypeClass::kType3: return scan_type3_equalities(instance.quad(), decomposition, tol, exec);
    case TypeClass::kDomEmpty: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// r = 1: dom f is every singleton. r = n-1: dom f is every [n] \ {k} such
// that all infinite pairs contain k. Any family of singletons or of
// co-singletons satisfies the set exchange axiom, and the valued axiom holds
// with equality because each exchange just swaps x and y.
Verdict short_circuit(const QuadraticInstance& instance) {
  Verdict v;
  v.method = "short-circuit";
  if (instance.r() == 1) {
    v.status = Status::kMConvex;
    return v;
  }
  const InfinityGraph graph = build_infinity_graph(instance);
  const std::size_t edges = graph.edge_count();
  bool nonempty = false;
  for (int k = 0; k < instance.n() && !nonempty; ++k) nonempty = graph.adjacency[k].size() == edges;
  v.status = nonempty ? Status::kMConvex : Status::kInvalidInstance;
  return v;
}

}  // namespace

Verdict test_mconvexity(const QuadraticInstance& instance, const Policy& policy) {
  const int n = instance.n();
  const int r = instance.r();
  if (r == 1 || r == n - 1) return short_circuit(instance);

  const InfinityGraph graph = build_infinity_graph(instance);
  const ComponentDecomposition decomposition = decompose_components(graph);
  const auto condition_b = check_condition_b(graph, decomposition);

  if (!condition_b) {
    if (policy.assume_condition_a) {
      return Verdict{Status::kNotMConvex, *condition_b.violation, "condition-B", std::nullopt};
    }
    if (binomial(n, r) <= policy.brute_force_budget) {
      try {
        Verdict v = exchange_axiom_holds(instance, {policy.tolerance, policy.brute_force_budget, policy.exec});
        v.method = "brute-force-exchange";
        return v;
      } catch (const BudgetExceeded&) {
        // Slice fits but |dom f|^2 does not; fall through to undecided.
      }
    }
    return Verdict{Status::kUndecided, std::nullopt, "condition-B-unresolved", std::nullopt};
  }

  const TypeClass type = classify(decomposition, r);
  Verdict v;
  switch (type) {
    case TypeClass::kDomEmpty:
      return Verdict{Status::kInvalidInstance, std::nullopt, "structure", TypeClass::kDomEmpty};
    case TypeClass::kType1: v = test_type1(instance, policy.tolerance, policy.exec); break;
    case TypeClass::kType2: v = test_type2(instance, decomposition, policy.tolerance, policy.exec); break;
    case TypeClass::kType3: v = test_type3(instance, decomposition, policy.tolerance, policy.exec); break;
  }
  if (policy.explain && v.status == Status::kNotMConvex) {
    auto quadruple = find_violation_quadruple(instance, decomposition, type, policy.tolerance, policy.exec);
    if (!quadruple) throw InternalInconsistency("fast test rejected but the reference scan found no violation");
    v.witness = *quadruple;
  }
  return v;
}

}  // namespace mconvex
