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

#include "mconvex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "parallel_first.hpp"

namespace mconvex {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int t = 1; t <= k; ++t) {
    // result * (n - k + t) / t stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + t);
    if (result > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    result = result * num / t;
  }
  return result;
}

ExtendedValue evaluate(const QuadraticInstance& instance, std::span<const int> support) {
  if (static_cast<int>(support.size()) != instance.r()) return kInfinity;
  ExtendedValue total = 0.0;
  for (std::size_t s = 0; s < support.size(); ++s) {
    total = total + instance.linear()[support[s]];
    for (std::size_t t = s + 1; t < support.size(); ++t) {
      const ExtendedValue v = instance.a(support[s], support[t]);
      if (v.is_infinite()) return kInfinity;
      total = total + v;
    }
  }
  return total;
}

namespace {

void check_budget(const QuadraticInstance& instance, std::uint64_t budget) {
  const std::uint64_t slice = binomial(instance.n(), instance.r());
  if (slice > budget) {
    throw BudgetExceeded("C(" + std::to_string(instance.n()) + "," + std::to_string(instance.r()) + ") = " +
                         std::to_string(slice) + " exceeds the brute-force budget " + std::to_string(budget));
  }
}

void check_pairs(std::size_t domain_size) {
  const auto d = static_cast<std::uint64_t>(domain_size);
  if (d != 0 && d > kMaxPairChecks / d) {
    throw BudgetExceeded("|dom f|^2 = " + std::to_string(d) + "^2 exceeds the pair-check cap");
  }
}

// Values of f on the whole slice, addressed by colexicographic rank.
class SliceTable {
 public:
  SliceTable(const QuadraticInstance& instance, std::uint64_t budget) : instance_(instance) {
    check_budget(instance, budget);
    const int n = instance.n();
    const int r = instance.r();
    choose_.assign(static_cast<std::size_t>(n + 1) * (r + 1), 0);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= r; ++b) choose_[a * (r + 1) + b] = binomial(a, b);
    }
    values_.assign(binomial(n, r), std::numeric_limits<double>::infinity());

    std::vector<int> s(r);
    for (int t = 0; t < r; ++t) s[t] = t;
    while (true) {
      const ExtendedValue v = evaluate(instance, s);
      if (v.is_finite()) {
        values_[rank(s)] = v.value();
        domain_.supports.push_back(s);
      }
      int t = r - 1;
      while (t >= 0 && s[t] == n - r + t) --t;
      if (t < 0) break;
      ++s[t];
      for (int u = t + 1; u < r; ++u) s[u] = s[u - 1] + 1;
    }
    domain_.n = n;
    domain_.r = r;
  }

  const DomainSet& domain() const { return domain_; }

  std::size_t rank(std::span<const int> sorted) const {
    const int r = instance_.r();
    std::size_t out = 0;
    for (int t = 0; t < static_cast<int>(sorted.size()); ++t) out += choose_[sorted[t] * (r + 1) + (t + 1)];
    return out;
  }

  ExtendedValue value(std::span<const int> sorted) const { return values_[rank(sorted)]; }

  // f(s - e_out + e_in) for out in s, in not in s.
  ExtendedValue swapped(const std::vector<int>& s, int out, int in, std::vector<int>& scratch) const {
    scratch.clear();
    bool placed = false;
    for (int v : s) {
      if (v == out) continue;
      if (!placed && in < v) {
        scratch.push_back(in);
        placed = true;
      }
      scratch.push_back(v);
    }
    if (!placed) scratch.push_back(in);
    return value(scratch);
  }

 private:
  const QuadraticInstance& instance_;
  std::vector<std::uint64_t> choose_;
  std::vector<double> values_;
  DomainSet domain_;
};

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Set exchange check without values, on supports given as sorted vectors.
template <class Member>
std::optional<ExchangeViolation> set_exchange_scan(const std::vector<std::vector<int>>& supports, Exec exec,
                                                   Member&& member) {
  check_pairs(supports.size());
  const int count = static_cast<int>(supports.size());
  return detail::first_over_rows<ExchangeViolation>(count, exec, [&](int xi) -> std::optional<ExchangeViolation> {
    const auto& x = supports[xi];
    std::vector<int> sx;
    std::vector<int> sy;
    for (const auto& y : supports) {
      const auto x_only = minus(x, y);
      const auto y_only = minus(y, x);
      for (int i : x_only) {
        bool found = false;
        for (int j : y_only) {
          if (member(x, i, j, sx) && member(y, j, i, sy)) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{x, y, i, true};
      }
    }
    return std::nullopt;
  });
}

Verdict empty_domain(std::string method) {
  return Verdict{Status::kInvalidInstance, std::nullopt, std::move(method), std::nullopt};
}

}  // namespace

DomainSet enumerate_domain(const QuadraticInstance& instance, std::uint64_t budget) {
  return SliceTable(instance, budget).domain();
}

CheckResult<ExchangeViolation> is_mconvex_set(const DomainSet& domain, Exec exec) {
  std::vector<std::vector<int>> sorted = domain.supports;
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const std::vector<int>& s, int out, int in, std::vector<int>& scratch) {
    scratch = s;
    *std::find(scratch.begin(), scratch.end(), out) = in;
    std::sort(scratch.begin(), scratch.end());
    return std::binary_search(sorted.begin(), sorted.end(), scratch);
  };
  return {set_exchange_scan(domain.supports, exec, member)};
}

Verdict exchange_axiom_holds(const QuadraticInstance& instance, const OracleOptions& options) {
  const SliceTable table(instance, options.budget);
  const auto& supports = table.domain().supports;
  if (supports.empty()) return empty_domain("oracle-exchange");
  check_pairs(supports.size());
  const Tolerance& tol = options.tolerance;
  const int count = static_cast<int>(supports.size());

  auto violation =
      detail::first_over_rows<ExchangeViolation>(count, options.exec, [&](int xi) -> std::optional<ExchangeViolation> {
        const auto& x = supports[xi];
        const ExtendedValue fx = table.value(x);
        std::vector<int> sx;
        std::vector<int> sy;
        for (const auto& y : supports) {
          const ExtendedValue lhs = fx + table.value(y);
          const auto x_only = minus(x, y);
          const auto y_only = minus(y, x);
          for (int i : x_only) {
            bool found = false;
            for (int j : y_only) {
              const ExtendedValue rhs = table.swapped(x, i, j, sx) + table.swapped(y, j, i, sy);
              if (rhs.is_finite() && tol.greater_equal(lhs, rhs)) {
                found = true;
                break;
              }
            }
            if (!found) return ExchangeViolation{x, y, i, false};
          }
        }
        return std::nullopt;
      });

  Verdict verdict;
  verdict.method = "oracle-exchange";
  verdict.status = violation ? Status::kNotMConvex : Status::kMConvex;
  if (violation) verdict.witness = *violation;
  return verdict;
}

Verdict local_exchange_holds(const QuadraticInstance& instance, const OracleOptions& options) {
  const SliceTable table(instance, options.budget);
  const auto& supports = table.domain().supports;
  if (supports.empty()) return empty_domain("oracle-local");

  Verdict verdict;
  verdict.method = "oracle-local";
  auto in_domain = [&](const std::vector<int>& s, int out, int in, std::vector<int>& scratch) {
    return table.swapped(s, out, in, scratch).is_finite();
  };
  if (auto set_violation = set_exchange_scan(supports, options.exec, in_domain)) {
    verdict.status = Status::kNotMConvex;
    verdict.witness = *set_violation;
    return verdict;
  }

  const Tolerance& tol = options.tolerance;
  const int count = static_cast<int>(supports.size());
  auto violation =
      detail::first_over_rows<ExchangeViolation>(count, options.exec, [&](int xi) -> std::optional<ExchangeViolation> {
        const auto& x = supports[xi];
        std::vector<int> z;
        std::vector<int> scratch;
        for (const auto& y : supports) {
          const auto x_only = minus(x, y);
          if (x_only.size() != 2) continue;
          const auto y_only = minus(y, x);
          z.clear();
          std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
          const int i = x_only[0], j = x_only[1], k = y_only[0], l = y_only[1];
          auto f_z_plus = [&](int u, int v) {
            scratch = z;
            scratch.push_back(u);
            scratch.push_back(v);
            std::sort(scratch.begin(), scratch.end());
            return table.value(scratch);
          };
          const ExtendedValue lhs = table.value(x) + table.value(y);
          const ExtendedValue rhs = std::min(f_z_plus(i, k) + f_z_plus(j, l), f_z_plus(i, l) + f_z_plus(j, k));
          if (!tol.greater_equal(lhs, rhs)) return ExchangeViolation{x, y, i, false};
        }
        return std::nullopt;
      });
  verdict.status = violation ? Status::kNotMConvex : Status::kMConvex;
  if (violation) verdict.witness = *violation;
  return verdict;
}

LinearFit fit_linear(const QuadraticInstance& instance, std::uint64_t budget) {
  const SliceTable table(instance, budget);
  const auto& supports = table.domain().supports;
  if (supports.empty()) throw std::invalid_argument("fit_linear: dom f is empty");
  const int n = instance.n();
  const auto rows = static_cast<Eigen::Index>(supports.size());

  // Columns: constant, then x_0 .. x_{n-2}.
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(rows, n);
  Eigen::VectorXd target(rows);
  for (Eigen::Index row = 0; row < rows; ++row) {
    design(row, 0) = 1.0;
    for (int v : supports[row]) {
      if (v < n - 1) design(row, v + 1) = 1.0;
    }
    target(row) = table.value(supports[row]).value();
  }
  const Eigen::VectorXd solution = design.completeOrthogonalDecomposition().solve(target);

  LinearFit fit;
  fit.alpha = solution(0);
  fit.p.assign(n, 0.0);
  for (int v = 0; v < n - 1; ++v) fit.p[v] = solution(v + 1);
  fit.max_residual = (design * solution - target).cwiseAbs().maxCoeff();
  return fit;
}

std::optional<LinearFit> linear_certificate(const QuadraticInstance& instance, std::uint64_t budget,
                                            double threshold) {
  LinearFit fit = fit_linear(instance, budget);
  if (fit.max_residual < threshold) return fit;
  return std::nullopt;
}

namespace {

std::vector<int> swap_one(std::vector<int> s, int out, int in) {
  *std::find(s.begin(), s.end(), out) = in;
  std::sort(s.begin(), s.end());
  return s;
}

bool verify(const QuadraticInstance& instance, const ExchangeViolation& w, const Tolerance& tol) {
  const int r = instance.r();
  if (static_cast<int>(w.x.size()) != r || static_cast<int>(w.y.size()) != r) return false;
  if (!std::is_sorted(w.x.begin(), w.x.end()) || !std::is_sorted(w.y.begin(), w.y.end())) return false;
  const ExtendedValue fx = evaluate(instance, w.x);
  const ExtendedValue fy = evaluate(instance, w.y);
  if (fx.is_infinite() || fy.is_infinite()) return false;
  const auto x_only = minus(w.x, w.y);
  if (!std::binary_search(x_only.begin(), x_only.end(), w.i)) return false;
  for (int j : minus(w.y, w.x)) {
    const ExtendedValue fx2 = evaluate(instance, swap_one(w.x, w.i, j));
    const ExtendedValue fy2 = evaluate(instance, swap_one(w.y, j, w.i));
    if (fx2.is_infinite() || fy2.is_infinite()) continue;
    if (w.set_only || tol.greater_equal(fx + fy, fx2 + fy2)) return false;
  }
  return true;
}

bool verify(const QuadraticInstance& instance, const QuadrupleViolation& w, const Tolerance& tol) {
  const auto [i, j, k, l] = w.indices;
  const int n = instance.n();
  for (int v : w.indices) {
    if (v < 0 || v >= n) return false;
  }
  if (i == j || i == k || i == l || j == k || j == l || k == l) return false;
  const auto& a = instance.quad();
  if (w.condition == QuadrupleViolation::Condition::kAntiTreeMetric) {
    const ExtendedValue s1 = a(i, j) + a(k, l);
    const ExtendedValue s2 = a(i, k) + a(j, l);
    const ExtendedValue s3 = a(i, l) + a(j, k);
    return !(tol.greater_equal(s1, std::min(s2, s3)) && tol.greater_equal(s2, std::min(s1, s3)) &&
             tol.greater_equal(s3, std::min(s1, s2)));
  }
  // i,k must be joined by an infinite coefficient, as must j,l for Type III.
  if (a(i, k).is_finite()) return false;
  if (w.condition == QuadrupleViolation::Condition::kType3Equality && a(j, l).is_finite()) return false;
  return !tol.equal(a(i, j) + a(k, l), a(i, l) + a(j, k));
}

bool verify(const QuadraticInstance& instance, const DomainViolation& w, const Tolerance&) {
  const auto [i, j, k] = w.triple;
  const int n = instance.n();
  for (int v : w.triple) {
    if (v < 0 || v >= n) return false;
  }
  if (i == j || j == k || i == k) return false;
  return instance.a(i, j).is_infinite() && instance.a(j, k).is_infinite() && instance.a(i, k).is_finite();
}

}  // namespace

bool verify_witness(const QuadraticInstance& instance, const Witness& witness, const Tolerance& tol) {
  return std::visit([&](const auto& w) { return verify(instance, w, tol); }, witness);
}

}  // namespace mconvex
