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

#include "mconvex/generators.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mconvex/oracle.hpp"

namespace mconvex {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("SimpleGraph: endpoint out of range");
  if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("SimpleGraph: duplicate edge");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  ++edge_count_;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: expected header \"n m\"");
  SimpleGraph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("edge list: endpoint out of range");
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  std::string trailing;
  if (in >> trailing) throw std::invalid_argument("edge list: trailing data");
  return g;
}

SimpleGraph random_graph(int n, int num, int den, std::uint64_t seed) {
  Rng rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform(rng, 0, den - 1) < num) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<long long> WeightedTree::label_distances() const {
  const int n = static_cast<int>(label_node.size());
  std::vector<std::vector<std::pair<int, int>>> adj(node_count);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<long long> out(static_cast<std::size_t>(n) * n, 0);
  std::vector<long long> dist(node_count);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[label_node[i]] = 0;
    stack.assign(1, label_node[i]);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [v, w] : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + w;
          stack.push_back(v);
        }
      }
    }
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = dist[label_node[j]];
  }
  return out;
}

WeightedTree random_weighted_tree(int n, int extra_nodes, std::uint64_t seed) {
  if (n < 1 || extra_nodes < 0) throw std::invalid_argument("random_weighted_tree: bad sizes");
  Rng rng(seed);
  WeightedTree t;
  t.node_count = n + extra_nodes;
  for (int v = 1; v < t.node_count; ++v) t.edges.push_back({uniform(rng, 0, v - 1), v, uniform(rng, 1, 10)});
  std::vector<int> nodes(t.node_count);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  t.label_node.assign(nodes.begin(), nodes.begin() + n);
  return t;
}

QuadraticInstance gen_tree_metric_type1(int n, int r, std::uint64_t seed, bool with_potential) {
  if (n < 4 || r < 2 || r > n - 2) throw std::invalid_argument("gen_tree_metric_type1: need n >= 4, 2 <= r <= n-2");
  Rng rng(seed);
  const WeightedTree tree = random_weighted_tree(n, n / 2, rng());
  const auto d = tree.label_distances();
  const long long c = *std::max_element(d.begin(), d.end());
  std::vector<int> p(n, 0);
  if (with_potential) {
    for (auto& v : p) v = uniform(rng, -5, 5);
  }
  QuadraticInstance inst(n, r);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      inst.set_quad(i, j, static_cast<double>(c - d[static_cast<std::size_t>(i) * n + j] + p[i] + p[j]));
    }
  }
  return inst;
}

QuadraticInstance make_linear_typed(const std::vector<std::vector<int>>& components, const std::vector<double>& q,
                                    int r) {
  const int n = static_cast<int>(q.size());
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].size() < 2) throw std::invalid_argument("make_linear_typed: components need >= 2 members");
    for (int v : components[c]) {
      if (v < 0 || v >= n || owner[v] >= 0) throw std::invalid_argument("make_linear_typed: components overlap");
      owner[v] = static_cast<int>(c);
    }
  }
  QuadraticInstance inst(n, r);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same = owner[i] >= 0 && owner[i] == owner[j];
      inst.set_quad(i, j, same ? kInfinity : ExtendedValue(q[i] + q[j]));
    }
  }
  return inst;
}

QuadraticInstance gen_linear_typed(const std::vector<int>& component_sizes, int r, std::uint64_t seed) {
  const int count = static_cast<int>(component_sizes.size());
  if (count != r + 1 && count != r) {
    throw std::invalid_argument("gen_linear_typed: component count must be r + 1 or r");
  }
  std::vector<std::vector<int>> big;
  int n = 0;
  for (int s : component_sizes) {
    if (s < 1) throw std::invalid_argument("gen_linear_typed: component sizes must be positive");
    if (s >= 2) {
      big.emplace_back(s);
      std::iota(big.back().begin(), big.back().end(), n);
    }
    n += s;
  }
  Rng rng(seed);
  std::vector<double> q(n);
  for (auto& v : q) v = uniform(rng, -5, 5);
  return make_linear_typed(big, q, r);
}

QuadraticInstance perturb(const QuadraticInstance& instance, int i, int j, double delta) {
  if (instance.a(i, j).is_infinite()) throw std::invalid_argument("perturb: pair is infinite");
  QuadraticInstance out = instance;
  out.set_quad(i, j, instance.a(i, j) + delta);
  return out;
}

QuadraticInstance build_f_graph(const SimpleGraph& graph, int r) {
  QuadraticInstance inst(graph.n(), r);
  for (auto [u, v] : graph.edges()) inst.set_quad(u, v, kInfinity);
  return inst;
}

SimpleGraph pad_graph(const SimpleGraph& graph, int m) {
  if (m < 1) throw std::invalid_argument("pad_graph: m must be at least 1");
  const int n = graph.n();
  SimpleGraph out(n + m);
  for (auto [u, v] : graph.edges()) out.add_edge(u, v);
  for (int u = 0; u < n; ++u) {
    for (int w = n; w < n + m; ++w) out.add_edge(u, w);
  }
  return out;
}

bool solve_problem_p(const SimpleGraph& graph, int r, std::uint64_t budget) {
  const int n = graph.n();
  if (r < 0 || r > n) throw std::invalid_argument("solve_problem_p: r out of range");
  if (binomial(n, r) > budget) throw BudgetExceeded("solve_problem_p: C(n, r) exceeds budget");

  std::vector<char> in_t(n, 0);
  std::vector<int> s(r);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    bool stable = true;
    for (int a = 0; a < r && stable; ++a) {
      for (int b = a + 1; b < r && stable; ++b) stable = !graph.has_edge(s[a], s[b]);
    }
    if (stable) {
      for (int v : s) in_t[v] = 1;
    }
    int k = r - 1;
    while (k >= 0 && s[k] == n - r + k) --k;
    if (k < 0) break;
    ++s[k];
    for (int t = k + 1; t < r; ++t) s[t] = s[t - 1] + 1;
  }

  // G[T] has only clique components iff no induced path u - v - w, i.e. any
  // two T-neighbours of a T-vertex are adjacent.
  for (int v = 0; v < n; ++v) {
    if (!in_t[v]) continue;
    for (int u = 0; u < n; ++u) {
      if (!in_t[u] || u == v || !graph.has_edge(u, v)) continue;
      for (int w = u + 1; w < n; ++w) {
        if (in_t[w] && w != v && graph.has_edge(v, w) && !graph.has_edge(u, w)) return false;
      }
    }
  }
  return true;
}

int max_stable_set_size(const SimpleGraph& graph) {
  const int n = graph.n();
  if (n > 30) throw std::invalid_argument("max_stable_set_size: n > 30");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : graph.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  int best = 0;
  // Branch on the lowest remaining vertex: take it (drop its neighbours) or skip it.
  auto rec = [&](auto&& self, std::uint32_t remaining, int size) -> void {
    if (size + std::popcount(remaining) <= best) return;
    if (remaining == 0) {
      best = size;
      return;
    }
    const int v = std::countr_zero(remaining);
    const std::uint32_t rest = remaining & ~(1u << v);
    self(self, rest & ~nbr[v], size + 1);
    self(self, rest, size);
  };
  rec(rec, n == 32 ? ~0u : ((1u << n) - 1u), 0);
  return best;
}

LaminarSample gen_random_laminar(int n, std::uint64_t seed, bool allow_infinity) {
  if (n < 2) throw std::invalid_argument("gen_random_laminar: n must be at least 2");
  Rng rng(seed);
  LaminarSample out;
  out.family.n = n;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  out.family.add(all, static_cast<double>(uniform(rng, -5, 5)), -1);

  // Nodes are appended parent-first, so a forward sweep visits every node
  // after its parent.
  for (std::size_t idx = 0; idx < out.family.nodes.size(); ++idx) {
    const auto node = out.family.nodes[idx];
    if (node.value.is_infinite()) continue;
    std::vector<int> members = node.members;
    std::shuffle(members.begin(), members.end(), rng);
    const int size = static_cast<int>(members.size());
    const int k = uniform(rng, 2, std::min(size, 4));
    std::vector<int> cuts;
    for (int c = 1; c < size; ++c) cuts.push_back(c);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    cuts.push_back(0);
    cuts.push_back(size);
    std::sort(cuts.begin(), cuts.end());
    for (int b = 0; b < k; ++b) {
      if (cuts[b + 1] - cuts[b] < 2 || uniform(rng, 0, 3) == 0) continue;
      std::vector<int> block(members.begin() + cuts[b], members.begin() + cuts[b + 1]);
      std::sort(block.begin(), block.end());
      const bool infinite = allow_infinity && uniform(rng, 0, 3) == 0;
      const ExtendedValue value = infinite ? kInfinity : node.value + static_cast<double>(uniform(rng, 1, 5));
      out.family.add(std::move(block), value, static_cast<int>(idx));
    }
  }

  // Paint each node's pairs, parents first, so the deepest node wins.
  out.matrix = SymmetricMatrix(n);
  for (const auto& node : out.family.nodes) {
    for (std::size_t a = 0; a < node.members.size(); ++a) {
      for (std::size_t b = a + 1; b < node.members.size(); ++b) out.matrix.set(node.members[a], node.members[b], node.value);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> breaking_pair(const LaminarFamily& family, std::uint64_t seed) {
  if (family.nodes.size() < 2) return std::nullopt;
  Rng rng(seed);
  const int c = uniform(rng, 1, static_cast<int>(family.nodes.size()) - 1);
  const auto& child = family.nodes[c];
  const auto& parent = family.nodes[child.parent];
  std::vector<int> outside;
  std::set_difference(parent.members.begin(), parent.members.end(), child.members.begin(), child.members.end(),
                      std::back_inserter(outside));
  const int i = child.members[uniform(rng, 0, static_cast<int>(child.members.size()) - 1)];
  const int j = outside[uniform(rng, 0, static_cast<int>(outside.size()) - 1)];
  return std::pair{std::min(i, j), std::max(i, j)};
}

QuadraticInstance gen_random_structured(int n, int r, std::uint64_t seed, const StructuredOptions& options) {
  if (n < 2 || r < 1 || r > n - 1) throw std::invalid_argument("gen_random_structured: bad n or r");
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  // Greedily carve cliques off the shuffled order while |A_0| + m stays >= r.
  std::vector<std::vector<int>> big;
  const int wanted = uniform(rng, 0, options.max_big_components);
  int pos = 0;
  int blocks = n;
  for (int c = 0; c < wanted; ++c) {
    const int room = std::min(n - pos, blocks - r + 1);
    if (room < 2) break;
    const int size = uniform(rng, 2, std::min(room, 4));
    big.emplace_back(order.begin() + pos, order.begin() + pos + size);
    pos += size;
    blocks -= size - 1;
  }

  QuadraticInstance inst(n, r);
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < big.size(); ++c) {
    for (int v : big[c]) owner[v] = static_cast<int>(c);
  }
  std::uniform_real_distribution<double> real(options.lo, options.hi);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (owner[i] >= 0 && owner[i] == owner[j]) {
        inst.set_quad(i, j, kInfinity);
      } else {
        inst.set_quad(i, j, options.integral ? static_cast<double>(uniform(rng, options.lo, options.hi)) : real(rng));
      }
    }
  }
  for (int i = 0; i < n; ++i) inst.set_linear(i, static_cast<double>(uniform(rng, -2, 2)));
  return inst;
}

}  // namespace mconvex
