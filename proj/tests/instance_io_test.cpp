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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "mconvex/instance.hpp"
#include "mconvex/io.hpp"
#include "test_util.hpp"

namespace mconvex {
namespace {

using testing::e3;
using testing::kInf;
using testing::r5;

TEST(InstanceTest, ValidatesShape) {
  EXPECT_THROW(QuadraticInstance(1, 1), std::invalid_argument);
  EXPECT_THROW(QuadraticInstance(4, 0), std::invalid_argument);
  EXPECT_THROW(QuadraticInstance(4, 4), std::invalid_argument);
  EXPECT_THROW(QuadraticInstance(3, 1, {0.0, 0.0}, SymmetricMatrix(3)), std::invalid_argument);
  EXPECT_THROW(QuadraticInstance(3, 1, {0.0, kInf.value(), 0.0}, SymmetricMatrix(3)), std::invalid_argument);
  QuadraticInstance inst(4, 2);
  EXPECT_THROW(inst.set_quad(2, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(inst.set_quad(0, 4, 1.0), std::out_of_range);
}

TEST(InstanceTest, SetQuadIsSymmetric) {
  QuadraticInstance inst(4, 2);
  inst.set_quad(3, 1, 7.5);
  EXPECT_EQ(inst.a(1, 3), 7.5);
  EXPECT_EQ(inst.a(3, 1), 7.5);
}

TEST(PotentialTest, ZeroPotentialIsIdentity) {
  const std::vector<double> p(5, 0.0);
  EXPECT_EQ(apply_potential(e3(), p), e3());
}

TEST(PotentialTest, ShiftsFiniteEntriesOnly) {
  const std::vector<double> p{1, 0, 0, 0, -1};
  const QuadraticInstance out = apply_potential(e3(), p);
  // a'_ij = a_ij + p_i + p_j
  EXPECT_EQ(out.a(0, 2), 2.0);
  EXPECT_EQ(out.a(0, 3), 3.0);
  EXPECT_EQ(out.a(0, 4), kInf);
  EXPECT_EQ(out.a(2, 4), 0.0);
  EXPECT_EQ(out.a(3, 4), 1.0);
  EXPECT_EQ(out.a(0, 1), 1.0);
  EXPECT_EQ(out.a(1, 4), -1.0);
  EXPECT_EQ(out.a(1, 2), 0.0);
  EXPECT_EQ(out.a(1, 3), 0.0);
  EXPECT_EQ(out.a(2, 3), 0.0);
  EXPECT_EQ(out.linear(), e3().linear());
}

TEST(RelabelTest, IdentityAndSwap) {
  const std::vector<int> id{0, 1, 2, 3, 4};
  EXPECT_EQ(relabel(e3(), id), e3());
  // 1 and 5 play symmetric roles in E3.
  const std::vector<int> swap15{4, 1, 2, 3, 0};
  EXPECT_EQ(relabel(e3(), swap15), e3());
  const std::vector<int> swap12{1, 0, 2, 3, 4};
  const QuadraticInstance out = relabel(e3(), swap12);
  EXPECT_EQ(out.a(1, 4), kInf);
  EXPECT_EQ(out.a(1, 2), 1.0);
  EXPECT_EQ(out.a(0, 2), 0.0);
}

TEST(RelabelTest, RejectsNonBijection) {
  const std::vector<int> bad{0, 0, 2, 3, 4};
  EXPECT_THROW(relabel(e3(), bad), std::invalid_argument);
  const std::vector<int> short_perm{0, 1, 2};
  EXPECT_THROW(relabel(e3(), short_perm), std::invalid_argument);
}

TEST(RelabelTest, InverseRoundTrip) {
  std::mt19937_64 rng(3);
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::vector<int> inv(5);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < 5; ++i) inv[perm[i]] = i;
    EXPECT_EQ(relabel(relabel(r5(), perm), inv), r5());
  }
}

TEST(ParseTest, GoldenFiles) {
  EXPECT_EQ(parse_instance(testing::read_file(testing::data_path("e3.json"))), e3());
  EXPECT_EQ(parse_instance(testing::read_file(testing::data_path("r5.json"))), r5());
}

TEST(ParseTest, AcceptsEitherOrderAndConsistentDuplicates) {
  const auto inst = parse_instance(R"({"n":3,"r":1,"quad":[{"i":3,"j":1,"v":4},{"i":1,"j":3,"v":4}]})");
  EXPECT_EQ(inst.a(0, 2), 4.0);
  EXPECT_EQ(inst.linear(), std::vector<double>(3, 0.0));
}

TEST(ParseTest, Errors) {
  const std::vector<std::string> bad = {
      R"(not json)",
      R"({"r":1})",
      R"({"n":1,"r":1})",
      R"({"n":3,"r":3})",
      R"({"n":3,"r":1.5})",
      R"({"n":3,"r":1,"linear":[0,0]})",
      R"({"n":3,"r":1,"linear":[0,"inf",0]})",
      R"({"n":3,"r":1,"quad":[{"i":2,"j":2,"v":1}]})",
      R"({"n":3,"r":1,"quad":[{"i":0,"j":2,"v":1}]})",
      R"({"n":3,"r":1,"quad":[{"i":1,"j":2,"v":"-inf"}]})",
      R"({"n":3,"r":1,"quad":[{"i":1,"j":2,"v":1},{"i":2,"j":1,"v":2}]})",
  };
  for (const auto& text : bad) EXPECT_THROW(parse_instance(text), ParseError) << text;
}

TEST(SerializeTest, RoundTripAndDeterminism) {
  for (const auto& inst : {e3(), r5()}) {
    const std::string text = serialize_instance(inst);
    EXPECT_EQ(parse_instance(text), inst);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(SerializeTest, OmitsZerosSortsPairs) {
  const auto doc = nlohmann::json::parse(serialize_instance(r5()));
  ASSERT_EQ(doc["quad"].size(), 6u);
  EXPECT_EQ(doc["quad"][0]["i"], 1);
  EXPECT_EQ(doc["quad"][0]["j"], 2);
  EXPECT_EQ(doc["quad"][2]["v"], "inf");
}

TEST(SerializeTest, RandomRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> real(-1e3, 1e3);
  for (int t = 0; t < 200; ++t) {
    QuadraticInstance inst(7, 3);
    for (int i = 0; i < 7; ++i) {
      inst.set_linear(i, real(rng));
      for (int j = i + 1; j < 7; ++j) inst.set_quad(i, j, rng() % 5 == 0 ? kInf : ExtendedValue(real(rng)));
    }
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(VerdictJsonTest, KeyOrderAndOneBasedWitness) {
  Verdict v{Status::kNotMConvex, QuadrupleViolation{QuadrupleViolation::Condition::kAntiTreeMetric, {0, 1, 2, 3}, {4.0, 2.0, 0.0}},
            "algorithm-I", TypeClass::kType1};
  const auto j = verdict_to_json(v, 1e-9);
  EXPECT_EQ(j.dump(),
            R"({"status":"not_m_convex","method":"algorithm-I","type":"I","witness":{"kind":"quadruple_violation",)"
            R"("condition":"anti_tree_metric","indices":[1,2,3,4],"sums":[4.0,2.0,0.0]},"epsilon":1e-09})");
}

}  // namespace
}  // namespace mconvex
