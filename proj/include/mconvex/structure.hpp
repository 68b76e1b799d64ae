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

// The infinity graph G_f (an edge wherever a_ij = +inf), its connected
// components, and the structural conditions derived from them:
//
//   Condition A  every index lies in some point of dom f;
//   Condition B  every component of G_f is a clique.
//
// Under B, dom f is the base family of the partition matroid "at most one
// element per big component", and the instance is of Type I, II or III
// according to |A_0| + m >= r + 2, = r + 1, = r, where A_0 is the set of
// isolated vertices and m the number of components with two or more vertices.

#ifndef MCONVEX_STRUCTURE_HPP_
#define MCONVEX_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "mconvex/instance.hpp"
#include "mconvex/verdict.hpp"

namespace mconvex {

struct InfinityGraph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;  // sorted neighbour lists

  bool has_edge(int i, int j) const;
  std::size_t edge_count() const;
};

struct ComponentDecomposition {
  std::vector<std::vector<int>> components;  // all components, ordered by smallest vertex
  std::vector<std::vector<int>> big;         // A_1..A_m: components with >= 2 vertices
  std::vector<int> isolated;                 // A_0
  std::vector<int> component_of;             // vertex -> index into `big`, or -1 if isolated

  int m() const { return static_cast<int>(big.size()); }
  // |A_0| + m
  int block_count() const { return static_cast<int>(isolated.size()) + m(); }
};

InfinityGraph build_infinity_graph(const QuadraticInstance& instance);

// Iterative traversal; vertices within a component are sorted.
ComponentDecomposition decompose_components(const InfinityGraph& graph);

// Holds when every component is a clique; otherwise the violation is an
// induced path i-j-k. O(n + |E|).
CheckResult<DomainViolation> check_condition_b(const InfinityGraph& graph,
                                               const ComponentDecomposition& decomposition);

// Requires Condition B.
TypeClass classify(const ComponentDecomposition& decomposition, int r);

// Under Condition B, Condition A is equivalent to |A_0| + m >= r.
bool check_condition_a_under_b(const ComponentDecomposition& decomposition, int r);

}  // namespace mconvex

#endif  // MCONVEX_STRUCTURE_HPP_
