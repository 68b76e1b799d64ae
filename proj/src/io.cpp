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

#include "mconvex/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace mconvex {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kMConvex: return "m_convex";
    case Status::kNotMConvex: return "not_m_convex";
    case Status::kUndecided: return "undecided";
    case Status::kInvalidInstance: return "invalid_instance";
  }
  return "unknown";
}

std::string_view to_string(TypeClass type) {
  switch (type) {
    case TypeClass::kType1: return "I";
    case TypeClass::kType2: return "II";
    case TypeClass::kType3: return "III";
    case TypeClass::kDomEmpty: return "dom_empty";
  }
  return "unknown";
}

int exit_code(Status status) {
  switch (status) {
    case Status::kMConvex: return 0;
    case Status::kNotMConvex: return 1;
    case Status::kUndecided: return 2;
    case Status::kInvalidInstance: return 3;
  }
  return 3;
}

namespace {

int require_int(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return it->get<int>();
}

double require_finite(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(what + " is not finite");
  return d;
}

ExtendedValue parse_value(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfinity;
    throw ParseError("quad value strings must be \"inf\"");
  }
  return require_finite(v, "quad value");
}

}  // namespace

QuadraticInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

  const int n = require_int(doc, "n");
  const int r = require_int(doc, "r");
  if (n < 2) throw ParseError("n must be at least 2");
  if (r < 1 || r > n - 1) throw ParseError("r out of range [1, n-1]");

  std::vector<double> linear(n, 0.0);
  if (auto it = doc.find("linear"); it != doc.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n) throw ParseError("linear must be an array of n numbers");
    for (int i = 0; i < n; ++i) linear[i] = require_finite((*it)[i], "linear coefficient");
  }

  SymmetricMatrix quad(n);
  std::map<std::pair<int, int>, ExtendedValue> seen;
  if (auto it = doc.find("quad"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("quad must be an array");
    for (const json& entry : *it) {
      if (!entry.is_object()) throw ParseError("quad entries must be objects");
      const int i = require_int(entry, "i");
      const int j = require_int(entry, "j");
      if (i < 1 || i > n || j < 1 || j > n) throw ParseError("quad index out of [1, n]");
      if (i == j) throw ParseError("quad entry on the diagonal");
      auto vit = entry.find("v");
      if (vit == entry.end()) throw ParseError("quad entry missing \"v\"");
      const ExtendedValue v = parse_value(*vit);
      const std::pair<int, int> key{std::min(i, j) - 1, std::max(i, j) - 1};
      auto [pos, inserted] = seen.emplace(key, v);
      if (!inserted && pos->second != v) {
        throw ParseError("asymmetric entry for pair (" + std::to_string(key.first + 1) + "," +
                         std::to_string(key.second + 1) + ")");
      }
      quad.set(key.first, key.second, v);
    }
  }
  return QuadraticInstance(n, r, std::move(linear), std::move(quad));
}

ordered_json value_to_json(ExtendedValue v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

std::string serialize_instance(const QuadraticInstance& instance) {
  ordered_json doc;
  doc["n"] = instance.n();
  doc["r"] = instance.r();
  doc["linear"] = instance.linear();
  ordered_json quad = ordered_json::array();
  for (int i = 0; i < instance.n(); ++i) {
    for (int j = i + 1; j < instance.n(); ++j) {
      const ExtendedValue v = instance.a(i, j);
      // -0.0 is kept so the round trip is bit-exact.
      if (v.is_finite() && v.value() == 0.0 && !std::signbit(v.value())) continue;
      quad.push_back(ordered_json{{"i", i + 1}, {"j", j + 1}, {"v", value_to_json(v)}});
    }
  }
  doc["quad"] = std::move(quad);
  return doc.dump(2) + "\n";
}

namespace {

ordered_json one_based(const std::vector<int>& idx) {
  ordered_json out = ordered_json::array();
  for (int v : idx) out.push_back(v + 1);
  return out;
}

std::string_view condition_name(QuadrupleViolation::Condition c) {
  switch (c) {
    case QuadrupleViolation::Condition::kAntiTreeMetric: return "anti_tree_metric";
    case QuadrupleViolation::Condition::kType2Equality: return "type2_equality";
    case QuadrupleViolation::Condition::kType3Equality: return "type3_equality";
  }
  return "unknown";
}

}  // namespace

ordered_json witness_to_json(const Witness& witness) {
  return std::visit(
      [](const auto& w) -> ordered_json {
        using T = std::decay_t<decltype(w)>;
        ordered_json out;
        if constexpr (std::is_same_v<T, ExchangeViolation>) {
          out["kind"] = "exchange_violation";
          out["x"] = one_based(w.x);
          out["y"] = one_based(w.y);
          out["i"] = w.i + 1;
          out["set_only"] = w.set_only;
        } else if constexpr (std::is_same_v<T, QuadrupleViolation>) {
          out["kind"] = "quadruple_violation";
          out["condition"] = condition_name(w.condition);
          out["indices"] = one_based({w.indices.begin(), w.indices.end()});
          ordered_json sums = ordered_json::array();
          for (ExtendedValue s : w.sums) sums.push_back(value_to_json(s));
          out["sums"] = std::move(sums);
        } else {
          out["kind"] = "domain_violation";
          out["triple"] = one_based({w.triple.begin(), w.triple.end()});
        }
        return out;
      },
      witness);
}

ordered_json verdict_to_json(const Verdict& verdict, double epsilon) {
  ordered_json out;
  out["status"] = to_string(verdict.status);
  out["method"] = verdict.method;
  if (verdict.type && *verdict.type != TypeClass::kDomEmpty) {
    out["type"] = to_string(*verdict.type);
  } else {
    out["type"] = nullptr;
  }
  out["witness"] = verdict.witness ? witness_to_json(*verdict.witness) : ordered_json(nullptr);
  out["epsilon"] = epsilon;
  return out;
}

}  // namespace mconvex
