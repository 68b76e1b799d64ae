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

#include "mconvex/structure.hpp"

#include <algorithm>
#include <queue>

namespace mconvex {

bool InfinityGraph::has_edge(int i, int j) const {
  const auto& adj = adjacency[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::size_t InfinityGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

InfinityGraph build_infinity_graph(const QuadraticInstance& instance) {
  InfinityGraph g;
  g.n = instance.n();
  g.adjacency.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    auto row = instance.quad().row(i);
    for (int j = 0; j < g.n; ++j) {
      if (j != i && row[j].is_infinite()) g.adjacency[i].push_back(j);
    }
  }
  return g;
}

ComponentDecomposition decompose_components(const InfinityGraph& graph) {
  ComponentDecomposition d;
  d.component_of.assign(graph.n, -1);
  std::vector<bool> visited(graph.n, false);
  std::vector<int> stack;
  for (int s = 0; s < graph.n; ++s) {
    if (visited[s]) continue;
    std::vector<int> comp;
    visited[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : graph.adjacency[v]) {
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() == 1) {
      d.isolated.push_back(comp.front());
    } else {
      for (int v : comp) d.component_of[v] = static_cast<int>(d.big.size());
      d.big.push_back(comp);
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

CheckResult<DomainViolation> check_condition_b(const InfinityGraph& graph,
                                               const ComponentDecomposition& decomposition) {
  for (const auto& comp : decomposition.big) {
    const std::size_t need = comp.size() - 1;
    for (int u : comp) {
      if (graph.adjacency[u].size() == need) continue;
      // u misses some vertex of its component; a shortest path to the
      // smallest such vertex starts with an induced path u-j-k.
      std::vector<bool> adjacent(graph.n, false);
      for (int w : graph.adjacency[u]) adjacent[w] = true;
      int target = -1;
      for (int v : comp) {
        if (v != u && !adjacent[v]) {
          target = v;
          break;
        }
      }
      std::vector<int> parent(graph.n, -2);
      std::queue<int> queue;
      parent[u] = -1;
      queue.push(u);
      while (!queue.empty() && parent[target] == -2) {
        int v = queue.front();
        queue.pop();
        for (int w : graph.adjacency[v]) {
          if (parent[w] == -2) {
            parent[w] = v;
            queue.push(w);
          }
        }
      }
      std::vector<int> path;
      for (int v = target; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return {DomainViolation{{path[0], path[1], path[2]}}};
    }
  }
  return {};
}

TypeClass classify(const ComponentDecomposition& decomposition, int r) {
  const int blocks = decomposition.block_count();
  if (blocks >= r + 2) return TypeClass::kType1;
  if (blocks == r + 1) return TypeClass::kType2;
  if (blocks == r) return TypeClass::kType3;
  return TypeClass::kDomEmpty;
}

bool check_condition_a_under_b(const ComponentDecomposition& decomposition, int r) {
  return decomposition.block_count() >= r;
}

}  // namespace mconvex
