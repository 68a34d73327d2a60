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

// Gain functions: how much a justice criterion improves when agent i's
// utility grows by d in {1, c}.
//
//   mnw      (u+d)/u            if u > 0, "M d" otherwise
//   leximin  -(c+1) u + d
//   p-mean   sign(p) ((u+d)^p - u^p)  if u > 0, "M d" otherwise
//
// "M d" (an arbitrarily large multiple of d) is modelled as its own tier
// above every ordinary value rather than as a finite constant.

#ifndef YANKEE_GAIN_HPP
#define YANKEE_GAIN_HPP

#include <cmath>
#include <compare>
#include <concepts>
#include <span>
#include <sstream>
#include <string>

#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

class GainValue {
 public:
  // Bottom stands for -infinity (no eligible agent).
  enum class Tier { kBottom = 0, kOrdinary = 1, kZeroEscape = 2 };

  static GainValue bottom() { return GainValue(Tier::kBottom); }

  static GainValue zero_escape(Value d) {
    GainValue g(Tier::kZeroEscape);
    g.num_ = d;
    return g;
  }

  // num / den with den > 0, compared exactly.
  static GainValue rational(Value num, Value den) {
    detail::require(den > 0, "GainValue: denominator must be positive");
    GainValue g(Tier::kOrdinary);
    g.num_ = num;
    g.den_ = den;
    return g;
  }

  static GainValue real(long double x) {
    GainValue g(Tier::kOrdinary);
    g.is_real_ = true;
    g.real_ = x;
    return g;
  }

  Tier tier() const { return tier_; }
  bool is_real() const { return is_real_; }
  Value numerator() const { return num_; }
  Value denominator() const { return den_; }
  long double real_value() const { return real_; }

  friend std::weak_ordering operator<=>(const GainValue& a, const GainValue& b) {
    if (a.tier_ != b.tier_) return a.tier_ <=> b.tier_;
    switch (a.tier_) {
      case Tier::kBottom:
        return std::weak_ordering::equivalent;
      case Tier::kZeroEscape:
        return a.num_ <=> b.num_;
      case Tier::kOrdinary:
        break;
    }
    detail::require(a.is_real_ == b.is_real_, "GainValue: comparing exact and real gains");
    if (a.is_real_) return compare_reals(a.real_, b.real_);
    __extension__ using Wide = __int128;
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs == rhs) return std::weak_ordering::equivalent;
    return lhs < rhs ? std::weak_ordering::less : std::weak_ordering::greater;
  }

  friend bool operator==(const GainValue& a, const GainValue& b) {
    return (a <=> b) == 0;
  }

  std::string to_string() const {
    std::ostringstream os;
    switch (tier_) {
      case Tier::kBottom:
        return "-inf";
      case Tier::kZeroEscape:
        os << "M*" << num_;
        return os.str();
      case Tier::kOrdinary:
        break;
    }
    if (is_real_) {
      os.precision(17);
      os << static_cast<double>(real_);
    } else if (den_ == 1) {
      os << num_;
    } else {
      os << num_ << "/" << den_;
    }
    return os.str();
  }

 private:
  explicit GainValue(Tier tier) : tier_(tier) {}

  Tier tier_;
  Value num_ = 0;
  Value den_ = 1;
  bool is_real_ = false;
  long double real_ = 0;
};

// A gain function maps (utilities, agent i in 1..n, d) to a GainValue.
template <typename F>
concept GainFunctionLike = requires(const F& f, std::span<const Value> u, AgentId i, Value d) {
  { f(u, i, d) } -> std::convertible_to<GainValue>;
};

inline GainValue gain(const Criterion& criterion, Value c, std::span<const Value> utilities,
                      AgentId i, Value d) {
  detail::require(i >= 1 && i <= utilities.size(), "gain: agent index out of range");
  detail::require(d == 1 || d == c, "gain: d must be 1 or c");
  const Value u = utilities[i - 1];
  detail::require(u >= 0, "gain: negative utility");
  switch (criterion.kind) {
    case CriterionKind::kMnw:
      if (u == 0) return GainValue::zero_escape(d);
      return GainValue::rational(u + d, u);
    case CriterionKind::kLeximin:
      return GainValue::rational(-(c + 1) * u + d, 1);
    case CriterionKind::kPMean: {
      if (criterion.p == 0 || criterion.p >= 1) {
        throw UnsupportedCriterionError("p-mean gain needs p < 1 and p != 0");
      }
      if (u == 0) return GainValue::zero_escape(d);
      const long double p = criterion.p;
      const long double base = static_cast<long double>(u);
      const long double delta = std::pow(base + static_cast<long double>(d), p) - std::pow(base, p);
      return GainValue::real(p > 0 ? delta : -delta);
    }
  }
  return GainValue::bottom();
}

// The gain function of a criterion, bound to an instance's c.
class CriterionGain {
 public:
  CriterionGain(Criterion criterion, Value c) : criterion_(criterion), c_(c) {
    if (criterion_.kind == CriterionKind::kPMean) Criterion::pmean(criterion_.p);
  }

  GainValue operator()(std::span<const Value> utilities, AgentId i, Value d) const {
    return gain(criterion_, c_, utilities, i, d);
  }

  const Criterion& criterion() const { return criterion_; }

 private:
  Criterion criterion_;
  Value c_;
};

}  // namespace yankee

#endif  // YANKEE_GAIN_HPP
