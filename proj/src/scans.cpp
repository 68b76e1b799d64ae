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

#include "mconvex/scans.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "parallel_first.hpp"

namespace mconvex {

namespace {

// Each row of the O(n^3)/O(n^4) scans is heavy enough to hand out alone.
constexpr int kScanMinRows = 8;

using Condition = QuadrupleViolation::Condition;

std::optional<QuadrupleViolation> anti_tree_row(const SymmetricMatrix& a, const Tolerance& tol, int i) {
  const int n = a.size();
  for (int j = i + 1; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        const ExtendedValue s1 = a(i, j) + a(k, l);
        const ExtendedValue s2 = a(i, k) + a(j, l);
        const ExtendedValue s3 = a(i, l) + a(j, k);
        const bool ok = tol.greater_equal(s1, std::min(s2, s3)) && tol.greater_equal(s2, std::min(s1, s3)) &&
                        tol.greater_equal(s3, std::min(s1, s2));
        if (!ok) return QuadrupleViolation{Condition::kAntiTreeMetric, {i, j, k, l}, {s1, s2, s3}};
      }
    }
  }
  return std::nullopt;
}

// i < k share big component p; j < l range over vertices accepted by in_range.
template <class InRange>
std::optional<QuadrupleViolation> equality_row(const SymmetricMatrix& a, const ComponentDecomposition& d,
                                               const Tolerance& tol, Condition condition, int i,
                                               InRange&& in_range) {
  const int n = a.size();
  const int p = d.component_of[i];
  if (p < 0) return std::nullopt;
  for (int j = 0; j < n; ++j) {
    if (!in_range(p, j)) continue;
    for (int k = i + 1; k < n; ++k) {
      if (d.component_of[k] != p) continue;
      for (int l = j + 1; l < n; ++l) {
        if (!in_range(p, l)) continue;
        const ExtendedValue lhs = a(i, j) + a(k, l);
        const ExtendedValue rhs = a(i, l) + a(j, k);
        if (!tol.equal(lhs, rhs)) return QuadrupleViolation{condition, {i, j, k, l}, {lhs, rhs}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<QuadrupleViolation> scan_anti_tree_metric(const SymmetricMatrix& a, const Tolerance& tol, Exec exec) {
  return detail::first_over_rows<QuadrupleViolation>(a.size(), exec,
                                                     [&](int i) { return anti_tree_row(a, tol, i); }, kScanMinRows);
}

std::optional<QuadrupleViolation> scan_type2_equalities(const SymmetricMatrix& a, const ComponentDecomposition& d,
                                                        const Tolerance& tol, Exec exec) {
  auto outside = [&](int p, int v) { return d.component_of[v] != p; };
  return detail::first_over_rows<QuadrupleViolation>(
      a.size(), exec, [&](int i) { return equality_row(a, d, tol, Condition::kType2Equality, i, outside); },
      kScanMinRows);
}

std::optional<QuadrupleViolation> scan_type3_equalities(const SymmetricMatrix& a, const ComponentDecomposition& d,
                                                        const Tolerance& tol, Exec exec) {
  // j and l must share a big component other than p.
  const int n = a.size();
  return detail::first_over_rows<QuadrupleViolation>(n, exec, [&](int i) -> std::optional<QuadrupleViolation> {
    const int p = d.component_of[i];
    if (p < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      const int q = d.component_of[j];
      if (q < 0 || q == p) continue;
      for (int k = i + 1; k < n; ++k) {
        if (d.component_of[k] != p) continue;
        for (int l = j + 1; l < n; ++l) {
          if (d.component_of[l] != q) continue;
          const ExtendedValue lhs = a(i, j) + a(k, l);
          const ExtendedValue rhs = a(i, l) + a(j, k);
          if (!tol.equal(lhs, rhs)) return QuadrupleViolation{Condition::kType3Equality, {i, j, k, l}, {lhs, rhs}};
        }
      }
    }
    return std::nullopt;
  }, kScanMinRows);
}

std::optional<std::array<int, 3>> scan_anti_ultrametric(const SymmetricMatrix& a, const Tolerance& tol, Exec exec) {
  const int n = a.size();
  return detail::first_over_rows<std::array<int, 3>>(n, exec, [&](int i) -> std::optional<std::array<int, 3>> {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (tol.greater(std::min(a(i, k), a(j, k)), a(i, j))) return std::array<int, 3>{i, j, k};
      }
    }
    return std::nullopt;
  }, kScanMinRows);
}

}  // namespace mconvex
