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

#include "mconvex/laminar.hpp"

#include <numeric>
#include <utility>

namespace mconvex {

int LaminarFamily::add(std::vector<int> members, ExtendedValue value, int parent) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back(Node{std::move(members), value, parent, {}});
  if (parent >= 0) nodes[parent].children.push_back(id);
  return id;
}

LaminarFamily decompose(const SymmetricMatrix& ahat, ExtendedValue alpha, const Tolerance& tol) {
  const int n = ahat.size();
  LaminarFamily family;
  family.n = n;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  family.add(all, alpha, -1);

  struct Frame {
    std::vector<int> set;
    ExtendedValue w;
    int parent;
  };
  // Pending sets are pairwise disjoint, so the stack holds O(n) indices.
  std::vector<Frame> stack;
  stack.push_back({std::move(all), alpha, 0});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const auto& set = frame.set;
    if (set.size() <= 1 || frame.w.is_infinite()) continue;

    const int pivot = set.front();
    const auto row = ahat.row(pivot);
    ExtendedValue e = kInfinity;
    for (std::size_t t = 1; t < set.size(); ++t) e = std::min(e, row[set[t]]);

    std::vector<int> argmin;
    std::vector<int> rest{pivot};
    for (std::size_t t = 1; t < set.size(); ++t) {
      const int j = set[t];
      (tol.equal(row[j], e) ? argmin : rest).push_back(j);
    }

    int parent = frame.parent;
    ExtendedValue w = frame.w;
    if (tol.greater(e, w)) {
      // L is a set family: the root frame re-inserting [n] (possible only
      // when alpha is below the pivot's row minimum) updates c_[n] in place.
      if (set.size() == family.nodes[parent].members.size()) {
        family.nodes[parent].value = e;
      } else {
        parent = family.add(set, e, parent);
      }
      w = e;
    }
    stack.push_back({std::move(rest), w, parent});
    stack.push_back({std::move(argmin), w, parent});
  }
  return family;
}

SymmetricMatrix reconstruct(const LaminarFamily& family, int n) {
  SymmetricMatrix out(n);
  for_each_plateau_pair(family, [&](int i, int j, ExtendedValue c) {
    out.set(i, j, c);
    return true;
  });
  return out;
}

bool check_anti_ultrametric(const SymmetricMatrix& ahat, ExtendedValue alpha, const Tolerance& tol) {
  const int n = ahat.size();
  const LaminarFamily family = decompose(ahat, alpha, tol);
  std::size_t assigned = 0;
  const bool all_equal = for_each_plateau_pair(family, [&](int i, int j, ExtendedValue c) {
    ++assigned;
    return tol.equal(ahat(i, j), c);
  });
  return all_equal && assigned == static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace mconvex
