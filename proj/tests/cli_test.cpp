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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_util.hpp"

namespace mconvex::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "mconvex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kE3 = testing::data_path("e3.json");
const std::string kR5 = testing::data_path("r5.json");

TEST(CliTest, TestE3) {
  const Outcome o = invoke({"test", "--input", kE3});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["status"], "m_convex");
  EXPECT_EQ(j["type"], "II");
  EXPECT_EQ(j["method"], "algorithm-II");
}

TEST(CliTest, StdinAndFileGiveIdenticalBytes) {
  const Outcome a = invoke({"test", "--input", kR5});
  const Outcome b = invoke({"test"}, testing::read_file(kR5));
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, invoke({"test", "--input", kR5}).out);
}

TEST(CliTest, ExplainR5) {
  const Outcome o = invoke({"explain", "--input", kR5});
  EXPECT_EQ(o.code, 1);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["witness"]["indices"], nlohmann::json({1, 2, 3, 4}));
  EXPECT_EQ(j["witness"]["sums"], nlohmann::json({4.0, 2.0, 0.0}));
}

TEST(CliTest, CrosscheckR5) {
  const Outcome o = invoke({"crosscheck", "--input", kR5, "--budget", "100000"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(nlohmann::json::parse(o.out)["agree"], true);
}

TEST(CliTest, OracleMethods) {
  for (const char* method : {"exchange", "local"}) {
    const Outcome o = invoke({"oracle", "--input", kE3, "--method", method});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(nlohmann::json::parse(o.out)["status"], "m_convex");
  }
  EXPECT_EQ(invoke({"oracle", "--input", kE3, "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "--input", kE3, "--budget", "3"}).code, 2);
}

TEST(CliTest, Classify) {
  const Outcome o = invoke({"classify", "--input", kE3});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, R"({"condition_b":true,"condition_a":true,"type":"II","components":[[1,5]],"isolated":[2,3,4]})"
                   "\n");
  const Outcome path = invoke({"classify"}, R"({"n":4,"r":2,"quad":[{"i":1,"j":2,"v":"inf"},{"i":2,"j":3,"v":"inf"}]})");
  const auto j = nlohmann::json::parse(path.out);
  EXPECT_EQ(j["condition_b"], false);
  EXPECT_TRUE(j["condition_a"].is_null());
  EXPECT_TRUE(j["type"].is_null());
}

TEST(CliTest, GenPipesIntoTest) {
  const Outcome gen = invoke({"gen", "--kind", "tree", "--n", "8", "--r", "3", "--seed", "7"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(gen.out, invoke({"gen", "--kind", "tree", "--n", "8", "--r", "3", "--seed", "7"}).out);
  EXPECT_EQ(invoke({"test"}, gen.out).code, 0);

  EXPECT_EQ(invoke({"test"}, invoke({"gen", "--kind", "linear2", "--n", "7", "--r", "3"}).out).code, 0);
  EXPECT_EQ(invoke({"test"}, invoke({"gen", "--kind", "linear3", "--sizes", "3,3", "--r", "2"}).out).code, 0);
  EXPECT_EQ(invoke({"test"}, invoke({"gen", "--kind", "perturbed", "--n", "7", "--r", "3"}).out).code, 1);
  const Outcome fg = invoke({"gen", "--kind", "fgraph", "--r", "2"}, "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  ASSERT_EQ(fg.code, 0);
  EXPECT_EQ(invoke({"classify"}, fg.out).out.find("\"condition_b\":false"), 1u);
}

TEST(CliTest, ErrorsAndExitCodes) {
  EXPECT_EQ(invoke({"test", "--input", "/nonexistent/x.json"}).code, kExitIoError);
  EXPECT_EQ(invoke({"test"}, "{\"n\": 2}").code, 3);
  EXPECT_EQ(invoke({"test"}, "garbage").code, 3);
  EXPECT_EQ(invoke({"gen", "--kind", "tree", "--n", "4", "--r", "3"}).code, 3);
  EXPECT_EQ(invoke({"test", "--epsilon", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const Outcome v = invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
}

TEST(CliTest, EpsilonEnvironmentAndFlag) {
  ::setenv("MCONVEX_EPSILON", "0.5", 1);
  const Outcome env = invoke({"test", "--input", kE3});
  EXPECT_EQ(nlohmann::json::parse(env.out)["epsilon"], 0.5);
  const Outcome flag = invoke({"test", "--input", kE3, "--epsilon", "1e-6"});
  EXPECT_EQ(nlohmann::json::parse(flag.out)["epsilon"], 1e-6);
  ::unsetenv("MCONVEX_EPSILON");
  EXPECT_EQ(nlohmann::json::parse(invoke({"test", "--input", kE3}).out)["epsilon"], 1e-9);
}

TEST(CliTest, PrettySummary) {
  const Outcome o = invoke({"test", "--input", kE3, "--pretty"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("status: m_convex"), std::string::npos);
}

TEST(CliTest, BenchReportsEverySize) {
  const Outcome o = invoke({"bench", "--sizes", "40,80", "--repeats", "1"});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][1]["n"], 80);
  EXPECT_EQ(j["results"][1]["status"], "m_convex");
}

}  // namespace
}  // namespace mconvex::cli
