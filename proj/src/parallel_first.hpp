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

#ifndef MCONVEX_SRC_PARALLEL_FIRST_HPP_
#define MCONVEX_SRC_PARALLEL_FIRST_HPP_

#include <atomic>
#include <optional>
#include <vector>

#include "mconvex/exec.hpp"

namespace mconvex::detail {

// Returns row_fn(i) for the smallest i in [0, rows) where it is non-empty.
// The parallel path evaluates rows out of order but skips any row above the
// best hit found so far, so the answer matches the serial loop.
template <class T, class RowFn>
std::optional<T> first_over_rows(int rows, Exec exec, RowFn&& row_fn, int min_parallel_rows = kParallelMinRows) {
  if (exec == Exec::kSerial) {
    for (int i = 0; i < rows; ++i) {
      if (auto hit = row_fn(i)) return hit;
    }
    return std::nullopt;
  }
  std::vector<std::optional<T>> hits(static_cast<std::size_t>(rows));
  std::atomic<int> best{rows};
#pragma omp parallel for schedule(dynamic, 1) if (rows >= min_parallel_rows)
  for (int i = 0; i < rows; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    hits[i] = row_fn(i);
    if (hits[i]) {
      int cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const int b = best.load();
  if (b == rows) return std::nullopt;
  return hits[b];
}

}  // namespace mconvex::detail

#endif  // MCONVEX_SRC_PARALLEL_FIRST_HPP_
