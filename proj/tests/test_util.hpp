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

// Shared fixtures and reference checks for the test binaries. The checks here
// are written straight from the definitions and deliberately avoid the
// library's own scan and decomposition code.

#ifndef MCONVEX_TESTS_TEST_UTIL_HPP_
#define MCONVEX_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "mconvex/instance.hpp"
#include "mconvex/value.hpp"

namespace mconvex::testing {

inline const ExtendedValue kInf = kInfinity;

// 1-based (i, j, v) triples; unlisted pairs are zero.
inline QuadraticInstance from_entries(int n, int r, std::initializer_list<std::tuple<int, int, ExtendedValue>> entries) {
  QuadraticInstance inst(n, r);
  for (const auto& [i, j, v] : entries) inst.set_quad(i - 1, j - 1, v);
  return inst;
}

// x1x3 + 2x1x4 + inf x1x5 + x3x5 + 2x4x5 on the 3-slice of {0,1}^5.
inline QuadraticInstance e3() {
  return from_entries(5, 3, {{1, 3, 1.0}, {1, 4, 2.0}, {1, 5, kInf}, {3, 5, 1.0}, {4, 5, 2.0}});
}

// Five indices, a_15 infinite, 2-slice.
inline QuadraticInstance r5() {
  return from_entries(5, 2,
                      {{1, 2, 2.0}, {1, 3, 1.0}, {1, 4, 0.0}, {1, 5, kInf}, {2, 3, 0.0}, {2, 4, 1.0}, {2, 5, 0.0},
                       {3, 4, 2.0}, {3, 5, 0.0}, {4, 5, 1.0}});
}

inline std::string data_path(const std::string& name) { return std::string(MCONVEX_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Symmetric matrix with entries drawn uniformly from `alphabet`.
inline SymmetricMatrix random_matrix(int n, const std::vector<ExtendedValue>& alphabet, std::mt19937_64& rng) {
  SymmetricMatrix m(n);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.set(i, j, alphabet[pick(rng)]);
  }
  return m;
}

// Exact comparisons: reference checks are only run on integer-valued data.
inline bool naive_anti_ultrametric(const SymmetricMatrix& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (a(i, j) < std::min(a(i, k), a(j, k))) return false;
      }
    }
  }
  return true;
}

// Among the three pairings of every 4-set, the smallest sum occurs at least twice.
inline bool naive_anti_tree_metric(const SymmetricMatrix& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          std::vector<ExtendedValue> s{a(i, j) + a(k, l), a(i, k) + a(j, l), a(i, l) + a(j, k)};
          std::sort(s.begin(), s.end());
          if (s[0] != s[1]) return false;
        }
      }
    }
  }
  return true;
}

// a_ij + a_kl == a_il + a_kj for all i != k in `rows` and j != l in `cols`.
inline bool naive_block_equalities(const SymmetricMatrix& a, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
  for (int i : rows) {
    for (int k : rows) {
      for (int j : cols) {
        for (int l : cols) {
          if (i == k || j == l) continue;
          if (a(i, j) + a(k, l) != a(i, l) + a(k, j)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace mconvex::testing

#endif  // MCONVEX_TESTS_TEST_UTIL_HPP_
