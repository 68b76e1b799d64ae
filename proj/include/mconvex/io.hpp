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

// JSON instance format and verdict output.
//
// Instance document (1-based indices, omitted pairs are 0):
//
//   {"n": 5, "r": 3, "linear": [0, 0, 0, 0, 0],
//    "quad": [{"i": 1, "j": 3, "v": 1}, {"i": 1, "j": 5, "v": "inf"}]}
//
// "linear" is optional and defaults to zeros. An entry may name a pair in
// either order; naming the same pair twice with different values is an error.

#ifndef MCONVEX_IO_HPP_
#define MCONVEX_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mconvex/instance.hpp"
#include "mconvex/verdict.hpp"

namespace mconvex {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuadraticInstance parse_instance(std::string_view text);

// Deterministic: keys in fixed order, quad entries sorted by (i, j), exact
// zeros omitted. parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const QuadraticInstance& instance);

nlohmann::ordered_json witness_to_json(const Witness& witness);
nlohmann::ordered_json verdict_to_json(const Verdict& verdict, double epsilon);

// +inf is written as the string "inf".
nlohmann::ordered_json value_to_json(ExtendedValue v);

}  // namespace mconvex

#endif  // MCONVEX_IO_HPP_
