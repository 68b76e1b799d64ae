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

#include "mconvex/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mconvex {

SymmetricMatrix::SymmetricMatrix(int n, ExtendedValue fill)
    : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {
  if (n < 0) throw std::invalid_argument("SymmetricMatrix: negative size");
  for (int i = 0; i < n; ++i) data_[static_cast<std::size_t>(i) * n + i] = 0.0;
}

void SymmetricMatrix::set(int i, int j, ExtendedValue v) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SymmetricMatrix: index out of range");
  if (i == j) throw std::invalid_argument("SymmetricMatrix: the diagonal is not a coefficient");
  data_[static_cast<std::size_t>(i) * n_ + j] = v;
  data_[static_cast<std::size_t>(j) * n_ + i] = v;
}

namespace {

void validate_shape(int n, int r) {
  if (n < 2) throw std::invalid_argument("instance: n must be at least 2");
  if (r < 1 || r > n - 1) {
    throw std::invalid_argument("instance: r = " + std::to_string(r) + " outside [1, n-1] for n = " +
                                std::to_string(n));
  }
}

}  // namespace

QuadraticInstance::QuadraticInstance(int n, int r)
    : n_(n), r_(r), linear_(n > 0 ? n : 0, 0.0), quad_(n > 0 ? n : 0) {
  validate_shape(n, r);
}

QuadraticInstance::QuadraticInstance(int n, int r, std::vector<double> linear, SymmetricMatrix quad)
    : n_(n), r_(r), linear_(std::move(linear)), quad_(std::move(quad)) {
  validate_shape(n, r);
  if (static_cast<int>(linear_.size()) != n) throw std::invalid_argument("instance: linear must have n entries");
  if (quad_.size() != n) throw std::invalid_argument("instance: quad must be n x n");
  for (double v : linear_) {
    if (!std::isfinite(v)) throw std::invalid_argument("instance: linear coefficients must be finite");
  }
}

void QuadraticInstance::set_quad(int i, int j, ExtendedValue v) { quad_.set(i, j, v); }

void QuadraticInstance::set_linear(int i, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("instance: linear coefficients must be finite");
  linear_.at(static_cast<std::size_t>(i)) = v;
}

QuadraticInstance apply_potential(const QuadraticInstance& instance, std::span<const double> p) {
  const int n = instance.n();
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("apply_potential: p must have n entries");
  QuadraticInstance out = instance;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ExtendedValue v = instance.a(i, j);
      if (v.is_finite()) out.set_quad(i, j, v + (p[i] + p[j]));
    }
  }
  return out;
}

QuadraticInstance relabel(const QuadraticInstance& instance, std::span<const int> perm) {
  const int n = instance.n();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("relabel: not a bijection");
    seen[v] = true;
  }
  QuadraticInstance out(n, instance.r());
  for (int i = 0; i < n; ++i) {
    out.set_linear(perm[i], instance.linear()[i]);
    for (int j = i + 1; j < n; ++j) out.set_quad(perm[i], perm[j], instance.a(i, j));
  }
  return out;
}

QuadraticInstance with_linear(const QuadraticInstance& instance, std::vector<double> linear) {
  return QuadraticInstance(instance.n(), instance.r(), std::move(linear), instance.quad());
}

}  // namespace mconvex
