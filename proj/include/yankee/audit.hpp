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

#ifndef YANKEE_AUDIT_HPP
#define YANKEE_AUDIT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yankee/allocation.hpp"
#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

struct EnvyWitness {
  AgentId envious = 0;
  AgentId envied = 0;
  std::optional<GoodId> good;  // EFX only: the good whose removal leaves envy
  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

struct EnvyCheck {
  bool satisfied = true;
  std::optional<EnvyWitness> witness;  // first violation in (i, j, g) order
};

// EF1: for all i, j some g in X_j has v_i(X_i) >= v_i(X_j - g). An empty X_j
// cannot be envied.
inline EnvyCheck check_ef1(const Instance& instance, const Allocation& x) {
  for (AgentId i = 1; i <= instance.n(); ++i) {
    const Value mine = instance.value(i, x.bundle(i));
    for (AgentId j = 1; j <= instance.n(); ++j) {
      if (i == j || x.bundle(j).empty()) continue;
      bool ok = false;
      x.bundle(j).for_each([&](GoodId g) {
        if (!ok && mine >= instance.value(i, x.bundle(j).without(g))) ok = true;
      });
      if (!ok) return {false, EnvyWitness{i, j, std::nullopt}};
    }
  }
  return {};
}

// EFX: for all i, j and every g in X_j, v_i(X_i) >= v_i(X_j - g).
inline EnvyCheck check_efx(const Instance& instance, const Allocation& x) {
  for (AgentId i = 1; i <= instance.n(); ++i) {
    const Value mine = instance.value(i, x.bundle(i));
    for (AgentId j = 1; j <= instance.n(); ++j) {
      if (i == j) continue;
      std::optional<GoodId> bad;
      x.bundle(j).for_each([&](GoodId g) {
        if (!bad && mine < instance.value(i, x.bundle(j).without(g))) bad = g;
      });
      if (bad) return {false, EnvyWitness{i, j, bad}};
    }
  }
  return {};
}

inline Value usw(const Instance& instance, const Allocation& x) {
  return utilitarian_welfare(utility_vector(instance, x));
}

inline NashWelfare nash_welfare(const Instance& instance, const Allocation& x) {
  return nash_welfare(utility_vector(instance, x));
}

inline long double pmean_welfare(const Instance& instance, const Allocation& x, long double p) {
  return pmean_value(utility_vector(instance, x), p);
}

inline constexpr std::size_t kMmsMaxAgents = 4;
inline constexpr std::size_t kMmsMaxGoods = 12;

namespace detail {

// v_i on every subset of the goods, indexed by bitmask.
inline std::vector<Value> value_table(const Instance& instance, AgentId i) {
  const std::size_t m = instance.m();
  std::vector<Value> table(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = instance.value(i, GoodSet::from_mask(m, mask));
  }
  return table;
}

}  // namespace detail

// Maximin share of agent i: the best worst bundle over all partitions of the
// goods into n bundles (empty bundles allowed). Exact, by enumerating set
// partitions as restricted growth strings.
inline Value mms(const Instance& instance, AgentId i) {
  detail::require(i >= 1 && i <= instance.n(), "mms: agent index out of range");
  const std::size_t n = instance.n();
  const std::size_t m = instance.m();
  if (n > kMmsMaxAgents || m > kMmsMaxGoods) {
    throw UnsupportedSizeError("mms: exact maximin share limited to n <= " +
                               std::to_string(kMmsMaxAgents) + " and m <= " +
                               std::to_string(kMmsMaxGoods));
  }
  if (m < n) return 0;
  if (n == 1) return instance.value(i, instance.all_goods());

  const auto table = detail::value_table(instance, i);
  std::vector<std::uint64_t> blocks(n, 0);
  Value best = 0;

  auto recurse = [&](auto&& self, GoodId g, std::size_t used) -> void {
    // Goods still to place cannot fill the empty blocks: every completion has
    // an empty bundle.
    if (n - used > m - g) return;
    if (g == m) {
      Value worst = std::numeric_limits<Value>::max();
      for (auto b : blocks) worst = std::min(worst, table[b]);
      best = std::max(best, worst);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << g;
    for (std::size_t k = 0; k < used; ++k) {
      blocks[k] |= bit;
      self(self, g + 1, used);
      blocks[k] &= ~bit;
    }
    if (used < n) {
      blocks[used] |= bit;
      self(self, g + 1, used + 1);
      blocks[used] &= ~bit;
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

struct MmsEntry {
  AgentId agent = 0;
  Value utility = 0;
  Value share = 0;
  std::optional<double> ratio;  // absent when the share is 0
  bool meets_threshold = true;
};

struct MmsReport {
  std::vector<MmsEntry> entries;
  // Guaranteed fraction of the share for the hinted criterion: 2/5 for max
  // Nash welfare, 1/(c+2) for leximin.
  std::optional<std::pair<Value, Value>> threshold;
  bool all_meet_threshold = true;
};

inline std::optional<std::pair<Value, Value>> mms_threshold(const Instance& instance,
                                                            std::optional<CriterionKind> hint) {
  if (!hint) return std::nullopt;
  switch (*hint) {
    case CriterionKind::kMnw:
      return std::pair<Value, Value>{2, 5};
    case CriterionKind::kLeximin:
      return std::pair<Value, Value>{1, instance.c() + 2};
    case CriterionKind::kPMean:
      return std::nullopt;
  }
  return std::nullopt;
}

inline MmsReport mms_ratio_report(const Instance& instance, const Allocation& x,
                                  std::optional<CriterionKind> hint) {
  MmsReport report;
  report.threshold = mms_threshold(instance, hint);
  for (AgentId i = 1; i <= instance.n(); ++i) {
    MmsEntry e;
    e.agent = i;
    e.utility = instance.value(i, x.bundle(i));
    e.share = mms(instance, i);
    if (e.share > 0) {
      e.ratio = static_cast<double>(e.utility) / static_cast<double>(e.share);
      if (report.threshold) {
        const auto [num, den] = *report.threshold;
        e.meets_threshold = e.utility * den >= e.share * num;
      }
    }
    report.all_meet_threshold = report.all_meet_threshold && e.meets_threshold;
    report.entries.push_back(e);
  }
  return report;
}

struct AuditOptions {
  bool mms = false;
  std::vector<long double> pmeans;
  std::optional<CriterionKind> criterion_hint;
};

struct AuditReport {
  UtilityVector utilities;
  NashWelfare nash;
  Value usw = 0;
  std::vector<std::pair<long double, long double>> pmeans;  // (p, value)
  EnvyCheck ef1;
  EnvyCheck efx;
  std::optional<MmsReport> mms;
};

inline AuditReport audit(const Instance& instance, const Allocation& x,
                         const AuditOptions& options = {}) {
  detail::require(x.n() == instance.n() && x.m() == instance.m(),
                  "audit: allocation does not match the instance");
  AuditReport r;
  r.utilities = utility_vector(instance, x);
  r.nash = nash_welfare(r.utilities);
  r.usw = utilitarian_welfare(r.utilities);
  for (long double p : options.pmeans) r.pmeans.emplace_back(p, pmean_value(r.utilities, p));
  r.ef1 = check_ef1(instance, x);
  r.efx = check_efx(instance, x);
  if (options.mms) r.mms = mms_ratio_report(instance, x, options.criterion_hint);
  return r;
}

}  // namespace yankee

#endif  // YANKEE_AUDIT_HPP
