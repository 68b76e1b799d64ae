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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mconvex/generators.hpp"
#include "mconvex/oracle.hpp"
#include "test_util.hpp"

namespace mconvex {
namespace {

using testing::e3;
using testing::kInf;

QuadraticInstance from_graph(const SimpleGraph& g, int r) { return build_f_graph(g, r); }

TEST(InfinityGraphTest, E3HasOneEdge) {
  const InfinityGraph g = build_infinity_graph(e3());
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 4));
  EXPECT_TRUE(g.has_edge(4, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(ComponentsTest, E3) {
  const auto d = decompose_components(build_infinity_graph(e3()));
  ASSERT_EQ(d.m(), 1);
  EXPECT_EQ(d.big[0], (std::vector<int>{0, 4}));
  EXPECT_EQ(d.isolated, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d.component_of, (std::vector<int>{0, -1, -1, -1, 0}));
  EXPECT_EQ(d.block_count(), 4);
}

TEST(ConditionBTest, CliqueComponentsHold) {
  SimpleGraph g(6);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  const InfinityGraph ig = build_infinity_graph(from_graph(g, 2));
  EXPECT_TRUE(check_condition_b(ig, decompose_components(ig)));
  const InfinityGraph e3g = build_infinity_graph(e3());
  EXPECT_TRUE(check_condition_b(e3g, decompose_components(e3g)));
}

TEST(ConditionBTest, PathWitness) {
  const auto inst = testing::from_entries(5, 2, {{1, 2, kInf}, {2, 3, kInf}});
  const InfinityGraph ig = build_infinity_graph(inst);
  const auto res = check_condition_b(ig, decompose_components(ig));
  ASSERT_FALSE(res);
  EXPECT_EQ(res.violation->triple, (std::array<int, 3>{0, 1, 2}));
}

bool reachable_pairs_adjacent(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    reach[i][i] = 1;
    for (int j = 0; j < n; ++j) {
      if (i != j && g.has_edge(i, j)) reach[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && reach[i][j] && !g.has_edge(i, j)) return false;
    }
  }
  return true;
}

TEST(ConditionBTest, MatchesTransitiveClosureOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const SimpleGraph g = random_graph(n, 1, 4, seed);
    const InfinityGraph ig = build_infinity_graph(from_graph(g, 1));
    const auto res = check_condition_b(ig, decompose_components(ig));
    ASSERT_EQ(res.holds(), reachable_pairs_adjacent(g)) << "seed " << seed;
    if (!res) {
      const auto [i, j, k] = res.violation->triple;
      EXPECT_TRUE(g.has_edge(i, j));
      EXPECT_TRUE(g.has_edge(j, k));
      EXPECT_FALSE(g.has_edge(i, k));
    }
  }
}

TEST(ClassifyTest, Thresholds) {
  const auto d = decompose_components(build_infinity_graph(e3()));
  EXPECT_EQ(classify(d, 2), TypeClass::kType1);
  EXPECT_EQ(classify(d, 3), TypeClass::kType2);
  EXPECT_EQ(classify(d, 4), TypeClass::kType3);
  EXPECT_TRUE(check_condition_a_under_b(d, 3));
  EXPECT_TRUE(check_condition_a_under_b(d, 4));
}

TEST(ClassifyTest, SingleCliqueHasEmptyDomain) {
  QuadraticInstance inst(5, 2);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) inst.set_quad(i, j, kInf);
  }
  const auto d = decompose_components(build_infinity_graph(inst));
  EXPECT_EQ(classify(d, 2), TypeClass::kDomEmpty);
  EXPECT_FALSE(check_condition_a_under_b(d, 2));
}

// Under B, Condition A against the enumerated domain.
TEST(ConditionATest, MatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const int r = 1 + static_cast<int>((seed / 4) % (n - 1));
    std::mt19937_64 rng(seed);
    std::vector<int> owner(n);
    for (auto& o : owner) o = static_cast<int>(rng() % 3);
    QuadraticInstance inst(n, r);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (owner[i] == owner[j] && owner[i] > 0) inst.set_quad(i, j, kInf);
      }
    }
    const InfinityGraph ig = build_infinity_graph(inst);
    const auto d = decompose_components(ig);
    ASSERT_TRUE(check_condition_b(ig, d));
    const DomainSet dom = enumerate_domain(inst);
    std::vector<char> covered(n, 0);
    for (const auto& s : dom.supports) {
      for (int v : s) covered[v] = 1;
    }
    const bool a = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    EXPECT_EQ(check_condition_a_under_b(d, r), a) << "seed " << seed;
    EXPECT_EQ(classify(d, r) == TypeClass::kDomEmpty, dom.supports.empty()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace mconvex
