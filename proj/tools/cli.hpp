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

#ifndef MCONVEX_TOOLS_CLI_HPP_
#define MCONVEX_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mconvex/oracle.hpp"

namespace mconvex::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes beyond the verdict codes 0..3.
inline constexpr int kExitIoError = 4;
inline constexpr int kExitDisagreement = 5;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input;   // stdin when empty
  std::optional<std::string> output;  // stdout when empty
  double epsilon = 1e-9;
  bool assume_condition_a = false;
  std::uint64_t budget = kDefaultDomainBudget;
  std::uint64_t seed = 1;
  bool explain = false;
  bool pretty = false;
  std::string method = "exchange";  // oracle: exchange | local

  // gen
  std::string kind = "tree";
  int n = 8;
  int r = 3;
  std::vector<int> sizes;

  // bench
  std::vector<int> bench_sizes = {100, 200, 400, 800, 1600, 3200};
  int repeats = 3;
};

// Executes one subcommand. Machine output goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) into a RunConfig and runs it. MCONVEX_EPSILON, when
// set, replaces the default tolerance; an explicit --epsilon wins over it.
int main_with_args(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mconvex::cli

#endif  // MCONVEX_TOOLS_CLI_HPP_
