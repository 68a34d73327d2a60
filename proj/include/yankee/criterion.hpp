// Copyright 2026 The Authors.
//
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

// Justice criteria and the welfare measures they order utility vectors by.

#ifndef YANKEE_CRITERION_HPP
#define YANKEE_CRITERION_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <sstream>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "yankee/allocation.hpp"
#include "yankee/errors.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

using BigInt = boost::multiprecision::cpp_int;

// Relative tolerance under which two p-mean quantities are treated as equal.
inline constexpr long double kRealTolerance = 1e-12L;

inline bool nearly_equal(long double a, long double b) {
  const long double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= kRealTolerance * scale;
}

inline std::weak_ordering compare_reals(long double a, long double b) {
  if (nearly_equal(a, b)) return std::weak_ordering::equivalent;
  return a < b ? std::weak_ordering::less : std::weak_ordering::greater;
}

enum class CriterionKind { kMnw, kLeximin, kPMean };

struct Criterion {
  CriterionKind kind = CriterionKind::kMnw;
  long double p = 0;  // only for kPMean

  static Criterion mnw() { return {CriterionKind::kMnw, 0}; }
  static Criterion leximin() { return {CriterionKind::kLeximin, 0}; }

  // Finite p < 1, p != 0. p = 0 is Nash welfare and p = 1 is utilitarian
  // welfare; neither has a p-mean gain function.
  static Criterion pmean(long double p) {
    if (!std::isfinite(p) || p == 0 || p >= 1) {
      std::ostringstream os;
      os << "p-mean welfare needs finite p < 1 with p != 0 (got " << static_cast<double>(p)
         << "); use mnw for p = 0 and utilitarian welfare for p = 1";
      throw UnsupportedCriterionError(os.str());
    }
    return {CriterionKind::kPMean, p};
  }

  std::string name() const {
    switch (kind) {
      case CriterionKind::kMnw:
        return "mnw";
      case CriterionKind::kLeximin:
        return "leximin";
      case CriterionKind::kPMean: {
        std::ostringstream os;
        os << "pmean(" << static_cast<double>(p) << ")";
        return os.str();
      }
    }
    return "?";
  }

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct NashWelfare {
  std::size_t positive_count = 0;
  BigInt product = 1;  // over agents with positive utility; empty product is 1
  friend bool operator==(const NashWelfare&, const NashWelfare&) = default;
};

inline NashWelfare nash_welfare(std::span<const Value> u) {
  NashWelfare w;
  for (Value x : u) {
    if (x > 0) {
      ++w.positive_count;
      w.product *= x;
    }
  }
  return w;
}

inline std::size_t positive_count(std::span<const Value> u) {
  return static_cast<std::size_t>(std::count_if(u.begin(), u.end(), [](Value x) { return x > 0; }));
}

// sum over positive entries of u_i^p.
inline long double power_sum(std::span<const Value> u, long double p) {
  long double total = 0;
  for (Value x : u) {
    if (x > 0) total += std::pow(static_cast<long double>(x), p);
  }
  return total;
}

// (1/n sum_{i in P} u_i^p)^(1/p) over the agents P with positive utility;
// p = 1 gives the arithmetic mean. Zero when nobody has positive utility.
inline long double pmean_value(std::span<const Value> u, long double p) {
  detail::require(p != 0 && std::isfinite(p), "pmean_value: p must be finite and nonzero");
  if (positive_count(u) == 0) return 0;
  const long double mean = power_sum(u, p) / static_cast<long double>(u.size());
  return std::pow(mean, 1 / p);
}

inline Value utilitarian_welfare(std::span<const Value> u) {
  Value total = 0;
  for (Value x : u) total += x;
  return total;
}

// Ψ order between two utility vectors of equal length; `greater` means `a`
// is strictly better. p-mean comparisons use the relative tolerance above.
inline std::weak_ordering compare_welfare(const Criterion& criterion, std::span<const Value> a,
                                          std::span<const Value> b) {
  detail::require(a.size() == b.size(), "compare_welfare: vectors differ in length");
  switch (criterion.kind) {
    case CriterionKind::kLeximin: {
      UtilityVector sa(a.begin(), a.end());
      UtilityVector sb(b.begin(), b.end());
      return compare_lex(sorted_vector(std::move(sa)), sorted_vector(std::move(sb)));
    }
    case CriterionKind::kMnw: {
      const auto wa = nash_welfare(a);
      const auto wb = nash_welfare(b);
      if (wa.positive_count != wb.positive_count) {
        return wa.positive_count <=> wb.positive_count;
      }
      if (wa.product == wb.product) return std::weak_ordering::equivalent;
      return wa.product < wb.product ? std::weak_ordering::less : std::weak_ordering::greater;
    }
    case CriterionKind::kPMean: {
      const auto ca = positive_count(a);
      const auto cb = positive_count(b);
      if (ca != cb) return ca <=> cb;
      // M_p is increasing in the power sum for p > 0 and decreasing for p < 0.
      const auto o = compare_reals(power_sum(a, criterion.p), power_sum(b, criterion.p));
      return criterion.p > 0 ? o : 0 <=> o;
    }
  }
  return std::weak_ordering::equivalent;
}

}  // namespace yankee

#endif  // YANKEE_CRITERION_HPP
