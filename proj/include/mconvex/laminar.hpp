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

// Laminar plateau structure of an anti-ultrametric matrix.
//
// A symmetric matrix satisfies a_ij >= min(a_ik, a_jk) for all distinct
// i, j, k exactly when there is a laminar family L containing [n] with values
// c_U, strictly increasing towards the leaves, such that a_ij = c_U(i,j) for
// the smallest U in L containing both i and j. decompose() builds the only
// candidate family in O(n^2); reconstruct() expands it back. The matrix is
// anti-ultrametric iff the two agree.

#ifndef MCONVEX_LAMINAR_HPP_
#define MCONVEX_LAMINAR_HPP_

#include <cstddef>
#include <vector>

#include "mconvex/instance.hpp"
#include "mconvex/value.hpp"

namespace mconvex {

struct LaminarFamily {
  struct Node {
    std::vector<int> members;  // sorted
    ExtendedValue value;
    int parent = -1;
    std::vector<int> children;
  };

  int n = 0;
  // nodes[0] is the root [n]; a parent always precedes its children.
  std::vector<Node> nodes;

  // Appends a node under `parent` and returns its index.
  int add(std::vector<int> members, ExtendedValue value, int parent);
};

// Runs the recursive splitting procedure from the root ([n], alpha): take the
// smallest index i of the current set U, let e be the minimum of a_ij over U
// and X its argmin set. If e exceeds the inherited plateau value w by more
// than the tolerance, U becomes a node with value e. Recurse on X and U \ X;
// a branch stops once it is a singleton or w is +inf.
LaminarFamily decompose(const SymmetricMatrix& ahat, ExtendedValue alpha, const Tolerance& tol = {});

// Calls fn(i, j, c_U) once for every pair i < j with U the smallest member of
// the family containing both. Nodes are handled leaves first. Stops early if
// fn returns false; returns false in that case.
template <class Fn>
bool for_each_plateau_pair(const LaminarFamily& family, Fn&& fn);

SymmetricMatrix reconstruct(const LaminarFamily& family, int n);

// decompose + reconstruct + compare, without materialising the reconstruction.
bool check_anti_ultrametric(const SymmetricMatrix& ahat, ExtendedValue alpha, const Tolerance& tol = {});

// ---------------------------------------------------------------------------

template <class Fn>
bool for_each_plateau_pair(const LaminarFamily& family, Fn&& fn) {
  std::vector<char> in_child(static_cast<std::size_t>(family.n), 0);
  std::vector<const std::vector<int>*> blocks;
  std::vector<std::vector<int>> singletons;
  for (std::size_t idx = family.nodes.size(); idx-- > 0;) {
    const auto& node = family.nodes[idx];
    blocks.clear();
    singletons.clear();
    for (int c : node.children) {
      for (int v : family.nodes[c].members) in_child[v] = 1;
    }
    for (int v : node.members) {
      if (!in_child[v]) singletons.push_back({v});
    }
    for (int c : node.children) {
      for (int v : family.nodes[c].members) in_child[v] = 0;
      blocks.push_back(&family.nodes[c].members);
    }
    for (const auto& s : singletons) blocks.push_back(&s);
    // Pairs inside one block belong to a deeper node.
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        for (int u : *blocks[a]) {
          for (int v : *blocks[b]) {
            if (!fn(u < v ? u : v, u < v ? v : u, node.value)) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace mconvex

#endif  // MCONVEX_LAMINAR_HPP_
