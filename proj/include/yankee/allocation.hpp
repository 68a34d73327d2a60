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

#ifndef YANKEE_ALLOCATION_HPP
#define YANKEE_ALLOCATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

// Entry k holds the utility of agent k + 1.
using UtilityVector = std::vector<Value>;

// An (n+1)-partition of the goods. Bundle 0 holds the unallocated goods.
class Allocation {
 public:
  Allocation() = default;

  // Every good starts unallocated.
  Allocation(std::size_t n, std::size_t m)
      : owners_(m, 0), bundles_(n + 1, GoodSet(m)) {
    bundles_[0] = GoodSet::full(m);
  }

  static Allocation from_owners(std::size_t n, std::span<const AgentId> owners) {
    Allocation x(n, owners.size());
    for (GoodId g = 0; g < owners.size(); ++g) {
      detail::require(owners[g] <= n, "Allocation: owner index out of range");
      x.move(g, owners[g]);
    }
    return x;
  }

  // bundles[k] is the bundle of agent k + 1; the remaining goods are
  // unallocated.
  static Allocation from_bundles(std::size_t m, std::span<const GoodSet> bundles) {
    Allocation x(bundles.size(), m);
    for (std::size_t k = 0; k < bundles.size(); ++k) {
      bundles[k].for_each([&](GoodId g) {
        detail::require(x.owner(g) == 0, "Allocation: bundles overlap");
        x.move(g, k + 1);
      });
    }
    return x;
  }

  std::size_t n() const { return bundles_.empty() ? 0 : bundles_.size() - 1; }
  std::size_t m() const { return owners_.size(); }

  const GoodSet& bundle(AgentId i) const { return bundles_.at(i); }
  AgentId owner(GoodId g) const { return owners_.at(g); }
  const std::vector<AgentId>& owners() const { return owners_; }

  void move(GoodId g, AgentId to) {
    detail::require(to < bundles_.size(), "Allocation::move: bad agent");
    AgentId from = owners_.at(g);
    if (from == to) return;
    bundles_[from].erase(g);
    bundles_[to].insert(g);
    owners_[g] = to;
  }

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.owners_ == b.owners_ && a.n() == b.n();
  }

 private:
  std::vector<AgentId> owners_;
  std::vector<GoodSet> bundles_;
};

// X = X^c ∪ X^1. `clean` is an (n+1)-partition whose bundle 0 holds every
// good not cleanly owned, including the supplementary goods.
// supplementary[i] is X^1_i for agents 1..n; supplementary[0] is unused and
// kept empty.
struct Decomposition {
  Allocation clean;
  std::vector<GoodSet> supplementary;

  // X_i = X^c_i ∪ X^1_i for every agent; everything else is unallocated.
  Allocation combined() const {
    const std::size_t n = clean.n();
    Allocation x(n, clean.m());
    for (AgentId i = 1; i <= n; ++i) {
      clean.bundle(i).for_each([&](GoodId g) { x.move(g, i); });
      supplementary[i].for_each([&](GoodId g) {
        detail::require(x.owner(g) == 0, "Decomposition: overlapping bundles");
        x.move(g, i);
      });
    }
    return x;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline bool is_clean_bundle(const Instance& instance, AgentId i, const GoodSet& s) {
  return instance.rank(i, s) == s.size();
}

// Every real agent's bundle is independent in their matroid. The pool is
// clean by definition.
inline bool is_clean(const Instance& instance, const Allocation& x) {
  for (AgentId i = 1; i <= instance.n(); ++i) {
    if (!is_clean_bundle(instance, i, x.bundle(i))) return false;
  }
  return true;
}

// Greedy decomposition: per agent (ascending), goods are scanned in ascending
// order and kept in the clean part while each adds rank. A single greedy pass
// yields a maximum independent subset, so |X^c_i| = rank_i(X_i).
inline Decomposition decompose(const Instance& instance, const Allocation& x) {
  const std::size_t n = instance.n();
  const std::size_t m = instance.m();
  Decomposition d{Allocation(n, m), std::vector<GoodSet>(n + 1, GoodSet(m))};
  for (AgentId i = 1; i <= n; ++i) {
    GoodSet kept(m);
    x.bundle(i).for_each([&](GoodId g) {
      GoodSet trial = kept.with(g);
      if (instance.rank(i, trial) == trial.size()) {
        kept = std::move(trial);
        d.clean.move(g, i);
      } else {
        d.supplementary[i].insert(g);
      }
    });
  }
  return d;
}

// Returns a description of the first violated decomposition property, or
// nullopt if `d` is a valid decomposition of `x`.
inline std::optional<std::string> decomposition_error(const Instance& instance,
                                                      const Allocation& x,
                                                      const Decomposition& d) {
  const std::size_t n = instance.n();
  if (d.clean.n() != n || d.supplementary.size() != n + 1) {
    return "decomposition has the wrong number of bundles";
  }
  if (!d.supplementary[0].empty()) return "supplementary bundle 0 must be empty";
  GoodSet clean_union(instance.m());
  for (AgentId i = 1; i <= n; ++i) {
    const auto& xc = d.clean.bundle(i);
    const auto& x1 = d.supplementary[i];
    const auto& xi = x.bundle(i);
    const std::string who = "agent " + std::to_string(i) + ": ";
    if (!xc.is_subset_of(xi) || !x1.is_subset_of(xi)) {
      return who + "parts are not subsets of the bundle";
    }
    if (xc.intersects(x1)) return who + "clean and supplementary parts overlap";
    if ((xc | x1) != xi) return who + "parts do not cover the bundle";
    if (xc.size() != instance.rank(i, xi)) {
      return who + "clean part is smaller than the bundle's rank";
    }
    if (!is_clean_bundle(instance, i, xc)) return who + "clean part is not clean";
    clean_union |= xc;
  }
  if (d.clean.bundle(0) != instance.all_goods() - clean_union) {
    return "clean pool is not the complement of the clean bundles";
  }
  return std::nullopt;
}

inline UtilityVector utility_vector(const Instance& instance, const Allocation& x) {
  UtilityVector u(instance.n());
  for (AgentId i = 1; i <= instance.n(); ++i) u[i - 1] = instance.value(i, x.bundle(i));
  return u;
}

inline UtilityVector sorted_vector(UtilityVector u) {
  std::sort(u.begin(), u.end());
  return u;
}

inline UtilityVector sorted_utility_vector(const Instance& instance, const Allocation& x) {
  return sorted_vector(utility_vector(instance, x));
}

// Utilities of the clean part: c |X^c_i|.
inline UtilityVector clean_utility_vector(const Instance& instance, const Decomposition& d) {
  UtilityVector u(instance.n());
  for (AgentId i = 1; i <= instance.n(); ++i) {
    u[i - 1] = instance.c() * static_cast<Value>(d.clean.bundle(i).size());
  }
  return u;
}

// Order of the first differing coordinate.
inline std::strong_ordering compare_lex(std::span<const Value> a, std::span<const Value> b) {
  detail::require(a.size() == b.size(), "compare_lex: vectors differ in length");
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

enum class Domination { kDominates, kDominated, kEquivalent };

inline std::string to_string(Domination d) {
  switch (d) {
    case Domination::kDominates:
      return "dominates";
    case Domination::kDominated:
      return "dominated";
    case Domination::kEquivalent:
      return "equivalent";
  }
  return "?";
}

// Compares X = X^c ∪ X^1 against Y = Y^c ∪ Y^1: first the sorted clean
// utilities, then the clean utility vectors, then the full utility vectors,
// each lexicographically.
inline Domination compare_domination(const Instance& instance, const Allocation& x,
                                     const Decomposition& xd, const Allocation& y,
                                     const Decomposition& yd) {
  auto verdict = [](std::strong_ordering o) {
    return o > 0 ? Domination::kDominates : Domination::kDominated;
  };
  const auto xc = clean_utility_vector(instance, xd);
  const auto yc = clean_utility_vector(instance, yd);
  if (auto o = compare_lex(sorted_vector(xc), sorted_vector(yc)); o != 0) return verdict(o);
  if (auto o = compare_lex(xc, yc); o != 0) return verdict(o);
  if (auto o = compare_lex(utility_vector(instance, x), utility_vector(instance, y)); o != 0) {
    return verdict(o);
  }
  return Domination::kEquivalent;
}

}  // namespace yankee

#endif  // YANKEE_ALLOCATION_HPP
