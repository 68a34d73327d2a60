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

#ifndef YANKEE_VALUATION_HPP
#define YANKEE_VALUATION_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"
#include "yankee/matroid.hpp"

namespace yankee {

using Value = std::int64_t;

inline constexpr const char* kHardnessNote =
    "the high value must be an integer multiple of the low value "
    "(c = b/a integer, c >= 2); for non-integral c computing max Nash "
    "welfare or leximin allocations is NP-hard";

// Returns c as an integer, or throws ValidationError citing hardness when c
// is not an integer >= 2.
inline Value integral_high_value(long double c) {
  if (!std::isfinite(c) || c < 2 || std::floor(c) != c) {
    throw ValidationError("unsupported valuation scale: " + std::string(kHardnessNote));
  }
  return static_cast<Value>(c);
}

// Rescales an (a, b) bivalued pair to (1, c). Requires a | b.
inline Value rescale_pair(Value a, Value b) {
  if (a <= 0 || b <= a) {
    throw ValidationError("bivalued pair needs 0 < a < b");
  }
  if (b % a != 0) {
    throw ValidationError("a = " + std::to_string(a) + " does not divide b = " +
                          std::to_string(b) + ": " + kHardnessNote);
  }
  return integral_high_value(static_cast<long double>(b / a));
}

// v(S) = |S| + (c - 1) rank(S): every good is worth 1, and goods in an
// independent subset are worth c.
class BivaluedValuation {
 public:
  BivaluedValuation(Value c, Matroid matroid) : c_(c), matroid_(std::move(matroid)) {
    detail::require(c_ >= 2, "BivaluedValuation: c must be >= 2");
  }

  Value c() const { return c_; }
  const Matroid& matroid() const { return matroid_; }

  std::size_t rank(const GoodSet& s) const { return matroid_.rank(s); }

  Value value(const GoodSet& s) const {
    return static_cast<Value>(s.size()) + (c_ - 1) * static_cast<Value>(rank(s));
  }

  // value(S + g) - value(S); always 1 or c.
  Value marginal(const GoodSet& s, GoodId g) const {
    detail::require(!s.contains(g), "marginal: good already in bundle");
    const auto gain = rank(s.with(g)) - rank(s);
    return 1 + (c_ - 1) * static_cast<Value>(gain);
  }

  friend bool operator==(const BivaluedValuation&, const BivaluedValuation&) = default;

 private:
  Value c_;
  Matroid matroid_;
};

// n agents with bivalued valuations sharing c, over m named goods. Agents are
// numbered 1..n; agent 0 is the pool of unallocated goods, valued c|S|.
class Instance {
 public:
  Instance(Value c, std::vector<std::string> goods, std::vector<std::string> agents,
           std::vector<Matroid> matroids, Value scale = 1)
      : c_(c),
        scale_(scale),
        goods_(std::move(goods)),
        agents_(std::move(agents)) {
    if (c_ < 2) throw ValidationError(std::string("c < 2: ") + kHardnessNote);
    if (scale_ < 1) throw ValidationError("scale must be a positive integer");
    if (agents_.empty()) throw ValidationError("an instance needs at least one agent");
    if (matroids.size() != agents_.size()) {
      throw ValidationError("one valuation is required per agent");
    }
    unique_names(goods_, "good");
    unique_names(agents_, "agent");
    valuations_.reserve(matroids.size());
    for (std::size_t k = 0; k < matroids.size(); ++k) {
      if (matroids[k].universe() != goods_.size()) {
        throw ValidationError("valuation of agent '" + agents_[k] +
                              "' is over the wrong number of goods");
      }
      if (std::holds_alternative<ExplicitMatroid>(matroids[k].spec())) {
        auto report = validate_explicit(matroids[k], 1);
        if (!report.ok()) {
          throw MalformedMatroidError("agent '" + agents_[k] +
                                      "': explicit rank table is not a matroid (" +
                                      report.violations.front().describe() + ")");
        }
      }
      valuations_.emplace_back(c_, std::move(matroids[k]));
    }
  }

  // Goods named g1..gm and agents named 1..n.
  static Instance make(Value c, std::size_t m, const std::vector<MatroidSpec>& specs) {
    std::vector<std::string> goods;
    for (std::size_t g = 0; g < m; ++g) goods.push_back("g" + std::to_string(g + 1));
    std::vector<std::string> agents;
    std::vector<Matroid> matroids;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      agents.push_back(std::to_string(i + 1));
      matroids.emplace_back(m, specs[i]);
    }
    return Instance(c, std::move(goods), std::move(agents), std::move(matroids));
  }

  std::size_t n() const { return agents_.size(); }
  std::size_t m() const { return goods_.size(); }
  Value c() const { return c_; }
  // Original low value a when the input was given as an (a, b) pair.
  Value scale() const { return scale_; }

  const std::vector<std::string>& goods() const { return goods_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::string& good_name(GoodId g) const { return goods_.at(g); }
  const std::string& agent_name(AgentId i) const {
    detail::require(i >= 1 && i <= n(), "agent index out of range");
    return agents_[i - 1];
  }

  std::optional<GoodId> find_good(const std::string& name) const {
    for (GoodId g = 0; g < goods_.size(); ++g) {
      if (goods_[g] == name) return g;
    }
    return std::nullopt;
  }

  const BivaluedValuation& valuation(AgentId i) const {
    detail::require(i >= 1 && i <= n(), "valuation: agent index out of range");
    return valuations_[i - 1];
  }

  std::size_t rank(AgentId i, const GoodSet& s) const {
    return i == 0 ? s.size() : valuation(i).rank(s);
  }

  Value value(AgentId i, const GoodSet& s) const {
    return i == 0 ? c_ * static_cast<Value>(s.size()) : valuation(i).value(s);
  }

  GoodSet empty_set() const { return GoodSet(m()); }
  GoodSet all_goods() const { return GoodSet::full(m()); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  static void unique_names(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) {
        throw ValidationError(std::string("duplicate ") + what + " name '" + name + "'");
      }
    }
  }

  Value c_;
  Value scale_;
  std::vector<std::string> goods_;
  std::vector<std::string> agents_;
  std::vector<BivaluedValuation> valuations_;
};

}  // namespace yankee

#endif  // YANKEE_VALUATION_HPP
