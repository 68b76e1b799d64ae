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

// Instance generators. Every routine is a pure function of its arguments and
// seed (std::mt19937_64).

#ifndef MCONVEX_GENERATORS_HPP_
#define MCONVEX_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mconvex/instance.hpp"
#include "mconvex/laminar.hpp"

namespace mconvex {

// Undirected simple graph on [0, n).
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int n() const { return n_; }
  // Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  // Sorted (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const { return edge_count_; }

 private:
  int n_;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
};

// "n m\nu v\n..." with 1-based endpoints. Throws std::invalid_argument.
SimpleGraph parse_edge_list(std::string_view text);

// G(n, p) with p = num / den.
SimpleGraph random_graph(int n, int num, int den, std::uint64_t seed);

struct WeightedTree {
  struct Edge {
    int u, v;
    int weight;  // > 0
  };
  int node_count = 0;
  std::vector<Edge> edges;
  std::vector<int> label_node;  // label i sits on node label_node[i]

  // d_T between the nodes carrying labels, as an n x n matrix (row-major).
  std::vector<long long> label_distances() const;
};

// Uniform recursive attachment on n + extra nodes, weights uniform in
// [1, 10], labels on n distinct random nodes.
WeightedTree random_weighted_tree(int n, int extra_nodes, std::uint64_t seed);

// a_ij = C - d_T(i, j) plus, if `with_potential`, p_i + p_j with integer
// p in [-5, 5]. Requires n >= 4 and 2 <= r <= n - 2.
QuadraticInstance gen_tree_metric_type1(int n, int r, std::uint64_t seed, bool with_potential = true);

// Deterministic core of gen_linear_typed: a_ij = +inf inside each listed
// component (0-based, disjoint, size >= 2), a_ij = q_i + q_j elsewhere.
// Indices not listed are singletons.
QuadraticInstance make_linear_typed(const std::vector<std::vector<int>>& components, const std::vector<double>& q,
                                    int r);

// Components laid out consecutively in the order of `component_sizes`, q
// uniform over the integers in [-5, 5]. The number of components must be
// r + 1 (Type II) or r (Type III); throws std::invalid_argument otherwise.
QuadraticInstance gen_linear_typed(const std::vector<int>& component_sizes, int r, std::uint64_t seed);

// a_ij += delta on a finite pair; throws std::invalid_argument on an infinite one.
QuadraticInstance perturb(const QuadraticInstance& instance, int i, int j, double delta);

// a_ij = +inf on edges, 0 elsewhere, zero linear part.
QuadraticInstance build_f_graph(const SimpleGraph& graph, int r);

// Adds m fresh vertices joined to every original vertex and to no new one.
// Throws std::invalid_argument for m < 1.
SimpleGraph pad_graph(const SimpleGraph& graph, int m);

// Is every component of G[T] complete, T the union of all stable r-sets?
// Brute force over C(n, r); throws BudgetExceeded above `budget`.
bool solve_problem_p(const SimpleGraph& graph, int r, std::uint64_t budget = 1'000'000);

// Size of a maximum stable set by exhaustive search over subsets (n <= 30).
int max_stable_set_size(const SimpleGraph& graph);

// A random laminar family on [n] with integer values strictly increasing
// towards the leaves, and the matrix it induces. With `allow_infinity`, some
// leaf nodes carry +inf, which makes them infinite cliques.
struct LaminarSample {
  LaminarFamily family;
  SymmetricMatrix matrix;
};
LaminarSample gen_random_laminar(int n, std::uint64_t seed, bool allow_infinity = false);

// A pair (i, j) whose increase by one breaks the anti-ultrametric property:
// i and k share a child block of some node U, j lies in another block of U.
// Empty when the family is a single plateau.
std::optional<std::pair<int, int>> breaking_pair(const LaminarFamily& family, std::uint64_t seed);

// Random instance satisfying Condition B with |A_0| + m >= r (hence
// Condition A). Finite entries are integers in [lo, hi] when `integral`,
// otherwise reals in [lo, hi).
struct StructuredOptions {
  int lo = -3;
  int hi = 3;
  bool integral = true;
  int max_big_components = 3;
};
QuadraticInstance gen_random_structured(int n, int r, std::uint64_t seed, const StructuredOptions& options = {});

}  // namespace mconvex

#endif  // MCONVEX_GENERATORS_HPP_
