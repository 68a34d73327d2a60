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

// Reference implementations for tests. These avoid the library's algorithms:
// ranks come from subset enumeration over independence tests, values from the
// definition, welfare comparisons from plain arithmetic.

#ifndef YANKEE_TESTS_REFERENCE_HPP
#define YANKEE_TESTS_REFERENCE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "yankee/yankee.hpp"

namespace ref {

using Mask = std::uint64_t;
using yankee::Value;

inline Mask mask_of(const yankee::GoodSet& s) {
  Mask out = 0;
  s.for_each([&](yankee::GoodId g) { out |= Mask{1} << g; });
  return out;
}

// Independence straight from each family's definition. Transversal uses
// Hall's condition over every subset.
inline bool independent(const yankee::MatroidSpec& spec, std::size_t m, Mask s) {
  if (const auto* u = std::get_if<yankee::UniformMatroid>(&spec)) {
    return static_cast<std::size_t>(std::popcount(s)) <= u->cap;
  }
  if (const auto* p = std::get_if<yankee::PartitionMatroid>(&spec)) {
    Mask covered = 0;
    for (std::size_t k = 0; k < p->parts.size(); ++k) {
      const Mask part = mask_of(p->parts[k]);
      covered |= part;
      if (static_cast<std::size_t>(std::popcount(s & part)) > p->caps[k]) return false;
    }
    return (s & ~covered) == 0;
  }
  if (const auto* mk = std::get_if<yankee::MarkedMatroid>(&spec)) {
    return (s & ~mask_of(mk->marked)) == 0;
  }
  if (const auto* t = std::get_if<yankee::TransversalMatroid>(&spec)) {
    for (Mask sub = s;; sub = (sub - 1) & s) {
      Mask slots = 0;
      for (std::size_t g = 0; g < m; ++g) {
        if ((sub >> g) & 1U) {
          for (auto slot : t->adjacency[g]) slots |= Mask{1} << slot;
        }
      }
      if (std::popcount(slots) < std::popcount(sub)) return false;
      if (sub == 0) break;
    }
    return true;
  }
  const auto& e = std::get<yankee::ExplicitMatroid>(spec);
  return e.ranks[s] == std::popcount(s);
}

inline std::size_t rank(const yankee::MatroidSpec& spec, std::size_t m, Mask s) {
  std::size_t best = 0;
  for (Mask sub = s;; sub = (sub - 1) & s) {
    if (static_cast<std::size_t>(std::popcount(sub)) > best && independent(spec, m, sub)) {
      best = static_cast<std::size_t>(std::popcount(sub));
    }
    if (sub == 0) break;
  }
  return best;
}

// v(S) as the best split of S into goods worth c (an independent set) and
// goods worth 1.
inline Value value(const yankee::MatroidSpec& spec, std::size_t m, Value c, Mask s) {
  return static_cast<Value>(std::popcount(s)) + (c - 1) * static_cast<Value>(rank(spec, m, s));
}

inline const yankee::MatroidSpec& spec(const yankee::Instance& inst, yankee::AgentId i) {
  return inst.valuation(i).matroid().spec();
}

// Positive count first, then the exact product.
inline int compare_mnw(const std::vector<Value>& a, const std::vector<Value>& b) {
  auto count = [](const std::vector<Value>& u) {
    return std::count_if(u.begin(), u.end(), [](Value x) { return x > 0; });
  };
  if (count(a) != count(b)) return count(a) < count(b) ? -1 : 1;
  boost::multiprecision::cpp_int pa = 1, pb = 1;
  for (Value x : a) {
    if (x > 0) pa *= x;
  }
  for (Value x : b) {
    if (x > 0) pb *= x;
  }
  return pa == pb ? 0 : (pa < pb ? -1 : 1);
}

inline int compare_leximin(std::vector<Value> a, std::vector<Value> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b ? 0 : (a < b ? -1 : 1);
}

// Positive count, then (sum over positive u^p) with the sign of p.
inline int compare_pmean(const std::vector<Value>& a, const std::vector<Value>& b, double p) {
  auto count = [](const std::vector<Value>& u) {
    return std::count_if(u.begin(), u.end(), [](Value x) { return x > 0; });
  };
  if (count(a) != count(b)) return count(a) < count(b) ? -1 : 1;
  long double sa = 0, sb = 0;
  for (Value x : a) {
    if (x > 0) sa += std::pow(static_cast<long double>(x), static_cast<long double>(p));
  }
  for (Value x : b) {
    if (x > 0) sb += std::pow(static_cast<long double>(x), static_cast<long double>(p));
  }
  if (std::fabs(sa - sb) <= 1e-12L * std::max(std::fabs(sa), std::fabs(sb))) return 0;
  const int raw = sa < sb ? -1 : 1;
  return p > 0 ? raw : -raw;
}

inline int compare(const yankee::Criterion& k, const std::vector<Value>& a,
                   const std::vector<Value>& b) {
  switch (k.kind) {
    case yankee::CriterionKind::kMnw:
      return compare_mnw(a, b);
    case yankee::CriterionKind::kLeximin:
      return compare_leximin(a, b);
    case yankee::CriterionKind::kPMean:
      return compare_pmean(a, b, static_cast<double>(k.p));
  }
  return 0;
}

// Utility vectors of every allocation, by recursion over goods (the library
// uses an odometer).
inline void all_utility_vectors(const yankee::Instance& inst,
                                const std::function<void(const std::vector<Value>&)>& visit) {
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  std::vector<std::vector<Value>> table(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (Mask s = 0; s < (Mask{1} << m); ++s) table[i].push_back(value(spec(inst, i), m, inst.c(), s));
  }
  std::vector<Mask> bundles(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == m) {
      std::vector<Value> u(n);
      for (std::size_t i = 1; i <= n; ++i) u[i - 1] = table[i][bundles[i]];
      visit(u);
      return;
    }
    for (std::size_t i = n + 1; i-- > 0;) {
      bundles[i] |= Mask{1} << g;
      rec(g + 1);
      bundles[i] &= ~(Mask{1} << g);
    }
  };
  rec(0);
}

// Best value under `k` over all allocations, as a sorted vector.
inline std::vector<Value> optimum_sorted(const yankee::Instance& inst, const yankee::Criterion& k) {
  std::vector<Value> best;
  bool have = false;
  all_utility_vectors(inst, [&](const std::vector<Value>& u) {
    if (!have || compare(k, u, best) > 0) {
      best = u;
      have = true;
    }
  });
  std::sort(best.begin(), best.end());
  return best;
}

// Maximin share by assigning each good to one of n labelled bundles (n^m
// assignments); the library enumerates set partitions instead.
inline Value mms(const yankee::Instance& inst, yankee::AgentId i) {
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  std::vector<Value> table;
  for (Mask s = 0; s < (Mask{1} << m); ++s) table.push_back(value(spec(inst, i), m, inst.c(), s));
  std::vector<std::size_t> label(m, 0);
  Value best = 0;
  while (true) {
    std::vector<Mask> bundles(n, 0);
    for (std::size_t g = 0; g < m; ++g) bundles[label[g]] |= Mask{1} << g;
    Value worst = std::numeric_limits<Value>::max();
    for (Mask b : bundles) worst = std::min(worst, table[b]);
    best = std::max(best, worst);
    std::size_t g = 0;
    while (g < m && label[g] == n - 1) label[g++] = 0;
    if (g == m) break;
    ++label[g];
  }
  return best;
}

inline bool clean_bundle(const yankee::Instance& inst, yankee::AgentId i, Mask s) {
  if (i == 0) return true;
  return rank(spec(inst, i), inst.m(), s) == static_cast<std::size_t>(std::popcount(s));
}

// Random utility vector helper for gain tests.
inline std::vector<Value> random_utilities(std::mt19937_64& rng, std::size_t n, Value max) {
  std::uniform_int_distribution<Value> dist(0, max);
  std::vector<Value> u(n);
  for (auto& x : u) x = dist(rng);
  return u;
}

}  // namespace ref

#endif  // YANKEE_TESTS_REFERENCE_HPP
