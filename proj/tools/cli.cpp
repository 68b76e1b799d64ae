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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mconvex/fast_tester.hpp"
#include "mconvex/generators.hpp"
#include "mconvex/io.hpp"
#include "mconvex/oracle.hpp"
#include "mconvex/structure.hpp"

namespace mconvex::cli {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& config, std::istream& in) {
  if (!config.input) return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(*config.input, std::ios::binary);
  if (!file) throw IoError("cannot open " + *config.input);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (!config.output) {
    out << text;
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!(file << text)) throw IoError("cannot write " + *config.output);
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

Policy policy_of(const RunConfig& config) {
  Policy p;
  p.assume_condition_a = config.assume_condition_a;
  p.brute_force_budget = config.budget;
  p.explain = config.explain;
  p.tolerance.epsilon = config.epsilon;
  return p;
}

OracleOptions oracle_options_of(const RunConfig& config) {
  OracleOptions o;
  o.tolerance.epsilon = config.epsilon;
  o.budget = config.budget;
  return o;
}

std::string summary(const Verdict& v) {
  std::ostringstream s;
  s << "status: " << to_string(v.status) << "\nmethod: " << v.method << "\n";
  if (v.type) s << "type:   " << to_string(*v.type) << "\n";
  if (v.witness) s << "witness: " << witness_to_json(*v.witness).dump() << "\n";
  return s.str();
}

int emit_verdict(const RunConfig& config, std::ostream& out, const Verdict& v) {
  write_output(config, out, config.pretty ? summary(v) : dump(verdict_to_json(v, config.epsilon)));
  return exit_code(v.status);
}

Verdict run_oracle(const RunConfig& config, const QuadraticInstance& inst) {
  try {
    return config.method == "local" ? local_exchange_holds(inst, oracle_options_of(config))
                                    : exchange_axiom_holds(inst, oracle_options_of(config));
  } catch (const BudgetExceeded&) {
    return Verdict{Status::kUndecided, std::nullopt, "oracle-budget", std::nullopt};
  }
}

ordered_json classify_json(const QuadraticInstance& inst) {
  const InfinityGraph graph = build_infinity_graph(inst);
  const ComponentDecomposition d = decompose_components(graph);
  const bool b = static_cast<bool>(check_condition_b(graph, d));
  ordered_json j;
  j["condition_b"] = b;
  j["condition_a"] = b ? ordered_json(check_condition_a_under_b(d, inst.r())) : ordered_json(nullptr);
  j["type"] = b ? ordered_json(to_string(classify(d, inst.r()))) : ordered_json(nullptr);
  auto one_based = [](const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
  };
  j["components"] = ordered_json::array();
  for (const auto& c : d.big) j["components"].push_back(one_based(c));
  j["isolated"] = one_based(d.isolated);
  return j;
}

std::vector<int> default_sizes(const std::string& kind, int n, int r) {
  // linear2: one big block plus r singletons (r + 1 blocks);
  // linear3: one big block plus r - 1 singletons (r blocks).
  const int singletons = kind == "linear2" ? r : r - 1;
  std::vector<int> sizes{n - singletons};
  sizes.insert(sizes.end(), singletons, 1);
  return sizes;
}

QuadraticInstance generate(const RunConfig& config, std::istream& in) {
  const std::string& kind = config.kind;
  if (kind == "tree") return gen_tree_metric_type1(config.n, config.r, config.seed);
  if (kind == "linear2" || kind == "linear3") {
    return gen_linear_typed(config.sizes.empty() ? default_sizes(kind, config.n, config.r) : config.sizes, config.r,
                            config.seed);
  }
  if (kind == "perturbed") {
    // First big-block member against the last singleton breaks an equality
    // together with the second member and any other singleton.
    const auto sizes = config.sizes.empty() ? default_sizes("linear2", config.n, config.r) : config.sizes;
    const QuadraticInstance base = gen_linear_typed(sizes, config.r, config.seed);
    return perturb(base, 0, base.n() - 1, 1.0);
  }
  if (kind == "fgraph") return build_f_graph(parse_edge_list(read_input(config, in)), config.r);
  throw std::invalid_argument("unknown --kind " + kind);
}

int run_bench(const RunConfig& config, std::ostream& out) {
  ordered_json results = ordered_json::array();
  const Policy policy = policy_of(config);
  for (int n : config.bench_sizes) {
    const QuadraticInstance inst = gen_tree_metric_type1(n, n / 2, config.seed + static_cast<std::uint64_t>(n));
    std::vector<double> seconds;
    Status status = Status::kUndecided;
    for (int rep = 0; rep < std::max(1, config.repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      status = test_mconvexity(inst, policy).status;
      seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(seconds.begin(), seconds.end());
    results.push_back({{"n", n}, {"status", to_string(status)}, {"median_seconds", seconds[seconds.size() / 2]}});
  }
  write_output(config, out, dump(ordered_json{{"results", results}}));
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!(config.epsilon > 0.0) || config.budget == 0) {
    err << "mconvex: epsilon and budget must be positive\n";
    return kExitUsage;
  }
  try {
    const std::string& cmd = config.subcommand;
    if (cmd == "gen") {
      write_output(config, out, serialize_instance(generate(config, in)));
      return 0;
    }
    if (cmd == "bench") return run_bench(config, out);

    const QuadraticInstance inst = parse_instance(read_input(config, in));
    if (cmd == "test" || cmd == "explain") {
      RunConfig c = config;
      c.explain = config.explain || cmd == "explain";
      return emit_verdict(c, out, test_mconvexity(inst, policy_of(c)));
    }
    if (cmd == "oracle") return emit_verdict(config, out, run_oracle(config, inst));
    if (cmd == "classify") {
      write_output(config, out, dump(classify_json(inst)));
      return 0;
    }
    if (cmd == "crosscheck") {
      const Verdict fast = test_mconvexity(inst, policy_of(config));
      const Verdict slow = run_oracle(config, inst);
      const bool decided = fast.status != Status::kUndecided && slow.status != Status::kUndecided;
      ordered_json j;
      j["fast"] = verdict_to_json(fast, config.epsilon);
      j["oracle"] = verdict_to_json(slow, config.epsilon);
      j["agree"] = decided ? ordered_json(fast.status == slow.status) : ordered_json(nullptr);
      if (config.pretty) {
        const std::string agree = decided ? (fast.status == slow.status ? "yes" : "no") : "unknown";
        write_output(config, out, "[fast]\n" + summary(fast) + "[oracle]\n" + summary(slow) + "agree: " + agree + "\n");
      } else {
        write_output(config, out, dump(j));
      }
      if (!decided) return exit_code(Status::kUndecided);
      return fast.status == slow.status ? 0 : kExitDisagreement;
    }
    err << "mconvex: unknown subcommand " << cmd << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "mconvex: " << e.what() << "\n";
    return kExitIoError;
  } catch (const ParseError& e) {
    err << "mconvex: " << e.what() << "\n";
    return exit_code(Status::kInvalidInstance);
  } catch (const std::invalid_argument& e) {
    err << "mconvex: " << e.what() << "\n";
    return exit_code(Status::kInvalidInstance);
  }
}

int main_with_args(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("MCONVEX_EPSILON")) {
    try {
      config.epsilon = std::stod(env);
    } catch (const std::exception&) {
      err << "mconvex: MCONVEX_EPSILON is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Quadratic M-convexity tester", "mconvex"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Instance JSON (default: stdin)");
  };
  auto add_common = [&](CLI::App* sub) {
    add_input(sub);
    sub->add_option("--out", config.output, "Output path (default: stdout)");
    sub->add_option("--epsilon", config.epsilon, "Relative comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--budget", config.budget, "Brute-force cap on C(n, r)")->check(CLI::PositiveNumber);
    sub->add_flag("--pretty", config.pretty, "Human-readable summary instead of JSON");
  };

  for (const char* name : {"test", "explain"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "test" ? "Decide M-convexity" : "Decide and attach a witness");
    add_common(sub);
    sub->add_flag("--assume-condition-a", config.assume_condition_a, "Treat a Condition B failure as a NO");
    sub->add_flag("--explain", config.explain, "Attach a violated quadruple to NO verdicts");
  }
  for (const char* name : {"oracle", "crosscheck"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "oracle" ? "Brute-force exchange check"
                                                                       : "Compare fast path against the oracle");
    add_common(sub);
    sub->add_flag("--assume-condition-a", config.assume_condition_a, "Treat a Condition B failure as a NO");
    sub->add_option("--method", config.method, "Oracle flavour")->check(CLI::IsMember({"exchange", "local"}));
  }
  auto* classify_cmd = app.add_subcommand("classify", "Infinity-graph structure and type");
  add_input(classify_cmd);
  classify_cmd->add_option("--out", config.output, "Output path (default: stdout)");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", config.kind, "Instance family")
      ->check(CLI::IsMember({"tree", "linear2", "linear3", "fgraph", "perturbed"}));
  gen->add_option("--n", config.n, "Number of indices");
  gen->add_option("--r", config.r, "Slice cardinality");
  gen->add_option("--sizes", config.sizes, "Component sizes for linear2/linear3/perturbed")->delimiter(',');
  gen->add_option("--seed", config.seed, "RNG seed");
  gen->add_option("--input", config.input, "Edge list for fgraph (default: stdin)");
  gen->add_option("--out", config.output, "Output path (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Time the pipeline on Type I instances");
  bench->add_option("--sizes", config.bench_sizes, "Values of n")->delimiter(',');
  bench->add_option("--repeats", config.repeats, "Runs per size (median reported)");
  bench->add_option("--seed", config.seed, "RNG seed");
  bench->add_option("--out", config.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, in, out, err);
}

}  // namespace mconvex::cli
