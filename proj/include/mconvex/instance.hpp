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

#ifndef MCONVEX_INSTANCE_HPP_
#define MCONVEX_INSTANCE_HPP_

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "mconvex/value.hpp"

namespace mconvex {

// Dense symmetric n x n matrix of extended values. The diagonal is not part
// of the matrix: it is stored (as zero) only so rows stay contiguous, and
// set() refuses to write it.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n, ExtendedValue fill = 0.0);

  int size() const { return n_; }

  ExtendedValue operator()(int i, int j) const {
    assert(i != j);
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  // Writes both (i,j) and (j,i).
  void set(int i, int j, ExtendedValue v);

  // Row i including the meaningless diagonal slot; callers skip j == i.
  std::span<const ExtendedValue> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<ExtendedValue> data_;
};

// f(x) = sum_i a_i x_i + sum_{i<j} a_ij x_i x_j on the slice sum(x) = r,
// +inf elsewhere. Indices are 0-based; the JSON format is 1-based.
class QuadraticInstance {
 public:
  // All-zero quadratic part and zero linear part.
  QuadraticInstance(int n, int r);
  QuadraticInstance(int n, int r, std::vector<double> linear, SymmetricMatrix quad);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<double>& linear() const { return linear_; }
  const SymmetricMatrix& quad() const { return quad_; }
  ExtendedValue a(int i, int j) const { return quad_(i, j); }

  void set_quad(int i, int j, ExtendedValue v);
  void set_linear(int i, double v);

  friend bool operator==(const QuadraticInstance&, const QuadraticInstance&) = default;

 private:
  int n_;
  int r_;
  std::vector<double> linear_;
  SymmetricMatrix quad_;
};

// a'_ij = a_ij + p_i + p_j on finite entries; infinities and linear terms are
// left alone.
QuadraticInstance apply_potential(const QuadraticInstance& instance, std::span<const double> p);

// a'_{perm[i], perm[j]} = a_ij and a'_{perm[i]} = a_i. Throws
// std::invalid_argument if perm is not a bijection on [0, n).
QuadraticInstance relabel(const QuadraticInstance& instance, std::span<const int> perm);

// Returns a copy with the linear coefficients replaced.
QuadraticInstance with_linear(const QuadraticInstance& instance, std::vector<double> linear);

}  // namespace mconvex

#endif  // MCONVEX_INSTANCE_HPP_
