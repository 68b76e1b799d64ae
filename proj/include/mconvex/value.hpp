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

#ifndef MCONVEX_VALUE_HPP_
#define MCONVEX_VALUE_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace mconvex {

// A real number or +infinity. Stored as a double whose only permitted
// non-finite state is +inf, so the IEEE rules give the extended arithmetic
// for free: finite < +inf, x + inf == inf.
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;

  // Implicit so that coefficient tables read naturally. +inf maps to
  // infinity(); NaN and -inf are rejected.
  constexpr ExtendedValue(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (v != v || v == -std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("ExtendedValue: NaN and -inf are not representable");
    }
  }

  static constexpr ExtendedValue infinity() {
    return ExtendedValue(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_finite() const { return v_ != std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }

  // Raw double; +inf for infinity.
  constexpr double value() const { return v_; }

  friend constexpr ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
    return ExtendedValue(a.v_ + b.v_);
  }
  // Subtracting a finite shift leaves infinity in place.
  friend constexpr ExtendedValue operator-(ExtendedValue a, double shift) {
    return ExtendedValue(a.v_ - shift);
  }

  friend constexpr bool operator==(ExtendedValue a, ExtendedValue b) = default;
  friend constexpr std::partial_ordering operator<=>(ExtendedValue a, ExtendedValue b) {
    return a.v_ <=> b.v_;
  }

 private:
  double v_ = 0.0;
};

inline constexpr ExtendedValue kInfinity = ExtendedValue::infinity();

// Relative tolerance used for every real comparison in the library:
// two finite values are "equal" when they differ by at most
// epsilon * max(1, |lhs|, |rhs|). Infinity compares exactly.
struct Tolerance {
  double epsilon = 1e-9;

  double slack(double lhs, double rhs) const {
    return epsilon * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  }

  bool equal(ExtendedValue lhs, ExtendedValue rhs) const {
    if (lhs.is_infinite() || rhs.is_infinite()) return lhs == rhs;
    return std::fabs(lhs.value() - rhs.value()) <= slack(lhs.value(), rhs.value());
  }

  // lhs >= rhs up to slack.
  bool greater_equal(ExtendedValue lhs, ExtendedValue rhs) const {
    if (lhs.is_infinite()) return true;
    if (rhs.is_infinite()) return false;
    return lhs.value() >= rhs.value() - slack(lhs.value(), rhs.value());
  }

  // lhs > rhs by more than slack.
  bool greater(ExtendedValue lhs, ExtendedValue rhs) const { return !greater_equal(rhs, lhs); }
};

}  // namespace mconvex

#endif  // MCONVEX_VALUE_HPP_
