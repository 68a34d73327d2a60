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

// Bivalued Yankee Swap.
//
// All goods start in the pool. Each round compares the best gain of adding c
// to an agent still in play (U) with the best gain of adding 1 to an agent
// out of play. In the first case the chosen agent takes a high-valued good
// through a shortest transfer path into the pool, or leaves U for good if no
// such path exists. In the second case the agent is provisionally handed the
// lowest free pool good. Provisional goods stay in the clean pool, so transfer
// paths may steal them; a stolen provisional good is replaced with the lowest
// free one. Ties go to agents in U first, then to lower indices.

#ifndef YANKEE_SOLVER_HPP
#define YANKEE_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "yankee/allocation.hpp"
#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/exchange.hpp"
#include "yankee/gain.hpp"
#include "yankee/good_set.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

enum class Action { kAugmented, kRemovedFromPlay, kProvisional };

inline std::string to_string(Action a) {
  switch (a) {
    case Action::kAugmented:
      return "augmented";
    case Action::kRemovedFromPlay:
      return "removed";
    case Action::kProvisional:
      return "provisional";
  }
  return "?";
}

struct IterationRecord {
  std::size_t iteration = 0;
  GainValue gain_c = GainValue::bottom();
  GainValue gain_1 = GainValue::bottom();
  AgentId agent = 0;
  Action action = Action::kRemovedFromPlay;
  Path path;                               // kAugmented
  std::optional<GoodId> provisional_good;  // kProvisional
  // kAugmented paths that end on someone's provisional good: that agent, the
  // stolen good and the free good handed out in its place.
  std::optional<AgentId> replaced_for;
  std::optional<GoodId> stolen_good;
  std::optional<GoodId> replacement_good;
};

using SolveTrace = std::vector<IterationRecord>;

struct SolveOptions {
  // Re-verify the loop invariants (cleanness, pool containment, the
  // c|X^c_i| + |X^1_i| utility identity, selection order) every iteration.
  bool check_invariants = false;
  bool record_trace = true;
};

struct SolveResult {
  Allocation allocation;
  Decomposition decomposition;
  SolveTrace trace;
  std::size_t iterations = 0;
  std::vector<AgentId> in_play;  // agents still in U at termination
};

namespace detail {

struct SolverState {
  Allocation clean;
  std::vector<GoodSet> provisional;  // indexed 0..n, [0] unused
  GoodSet provisional_union;
  std::vector<char> in_play;
  std::vector<std::size_t> clean_count;
  std::vector<std::size_t> extra_count;
  UtilityVector utilities;

  SolverState(std::size_t n, std::size_t m)
      : clean(n, m),
        provisional(n + 1, GoodSet(m)),
        provisional_union(m),
        in_play(n + 1, 1),
        clean_count(n + 1, 0),
        extra_count(n + 1, 0),
        utilities(n, 0) {
    in_play[0] = 0;
  }
};

inline void check_loop_invariants(const Instance& instance, const SolverState& s) {
  ensure(is_clean(instance, s.clean), "solver: clean allocation lost cleanness");
  ensure(s.provisional_union.is_subset_of(s.clean.bundle(0)),
         "solver: a provisional good left the clean pool");
  std::size_t total = 0;
  for (AgentId i = 1; i <= instance.n(); ++i) {
    total += s.provisional[i].size();
    ensure(s.clean.bundle(i).size() == s.clean_count[i] &&
               s.provisional[i].size() == s.extra_count[i],
           "solver: cached bundle sizes are stale");
    const Value expected = instance.c() * static_cast<Value>(s.clean_count[i]) +
                           static_cast<Value>(s.extra_count[i]);
    ensure(instance.value(i, s.clean.bundle(i) | s.provisional[i]) == expected,
           "solver: utility differs from c|X^c_i| + |X^1_i|");
    ensure(s.utilities[i - 1] == expected, "solver: cached utility is stale");
    ensure(!s.in_play[i] || s.provisional[i].empty(),
           "solver: an agent in U holds provisional goods");
  }
  ensure(total == s.provisional_union.size(), "solver: provisional bundles overlap");
}

// The agent picked from U must hold the least utility in U, ties to the
// lowest index.
inline void check_selection(const SolverState& s, AgentId chosen) {
  const Value mine = s.utilities[chosen - 1];
  for (AgentId j = 1; j < s.in_play.size(); ++j) {
    if (!s.in_play[j]) continue;
    const Value theirs = s.utilities[j - 1];
    ensure(theirs > mine || (theirs == mine && j >= chosen),
           "solver: chosen agent does not have the least utility in U");
  }
}

}  // namespace detail

template <GainFunctionLike Gain>
SolveResult solve_with_gain(const Instance& instance, const Gain& gain_fn,
                            const SolveOptions& options = {}) {
  const std::size_t n = instance.n();
  const std::size_t m = instance.m();
  const Value c = instance.c();
  detail::SolverState s(n, m);
  SolveResult result;
  std::size_t iterations = 0;

  while (s.provisional_union.size() < s.clean.bundle(0).size()) {
    detail::ensure(iterations < m + n, "solver: iteration bound m + n exceeded");
    if (options.check_invariants) detail::check_loop_invariants(instance, s);

    GainValue gain_c = GainValue::bottom();
    GainValue gain_1 = GainValue::bottom();
    AgentId best_c = 0;
    AgentId best_1 = 0;
    for (AgentId i = 1; i <= n; ++i) {
      if (s.in_play[i]) {
        GainValue g = gain_fn(s.utilities, i, c);
        if (best_c == 0 || g > gain_c) {
          gain_c = g;
          best_c = i;
        }
      } else {
        GainValue g = gain_fn(s.utilities, i, Value{1});
        if (best_1 == 0 || g > gain_1) {
          gain_1 = g;
          best_1 = i;
        }
      }
    }

    IterationRecord record;
    record.iteration = iterations;
    record.gain_c = gain_c;
    record.gain_1 = gain_1;

    if (best_c != 0 && gain_c >= gain_1) {
      const AgentId i = best_c;
      record.agent = i;
      if (options.check_invariants) detail::check_selection(s, i);
      if (auto path = find_transfer_path(instance, s.clean, i)) {
        const GoodId last = path->back();
        AgentId robbed = 0;
        if (s.provisional_union.contains(last)) {
          for (AgentId j = 1; j <= n; ++j) {
            if (s.provisional[j].contains(last)) robbed = j;
          }
        }
        augment_in_place(instance, s.clean, *path, i);
        ++s.clean_count[i];
        s.utilities[i - 1] += c;
        record.action = Action::kAugmented;
        if (robbed != 0) {
          s.provisional[robbed].erase(last);
          s.provisional_union.erase(last);
          auto free_good = s.clean.bundle(0).first_not_in(s.provisional_union);
          detail::ensure(free_good.has_value(), "solver: no free good to replace a stolen one");
          s.provisional[robbed].insert(*free_good);
          s.provisional_union.insert(*free_good);
          record.replaced_for = robbed;
          record.stolen_good = last;
          record.replacement_good = *free_good;
        }
        record.path = std::move(*path);
      } else {
        s.in_play[i] = 0;
        record.action = Action::kRemovedFromPlay;
      }
    } else {
      const AgentId i = best_1;
      record.agent = i;
      const auto free_good = s.clean.bundle(0).first_not_in(s.provisional_union);
      detail::ensure(free_good.has_value(), "solver: no free good for a provisional pick");
      s.provisional[i].insert(*free_good);
      s.provisional_union.insert(*free_good);
      ++s.extra_count[i];
      s.utilities[i - 1] += 1;
      record.action = Action::kProvisional;
      record.provisional_good = *free_good;
    }
    if (options.record_trace) result.trace.push_back(std::move(record));
    ++iterations;
  }
  if (options.check_invariants) detail::check_loop_invariants(instance, s);

  result.iterations = iterations;
  result.decomposition = Decomposition{std::move(s.clean), std::move(s.provisional)};
  result.allocation = result.decomposition.combined();
  for (AgentId i = 1; i <= n; ++i) {
    if (s.in_play[i]) result.in_play.push_back(i);
  }
  if (options.check_invariants) {
    detail::ensure(result.allocation.bundle(0).empty(), "solver: goods left unallocated");
    auto error = decomposition_error(instance, result.allocation, result.decomposition);
    detail::ensure(!error.has_value(), "solver: output decomposition invalid: " + error.value_or(""));
  }
  return result;
}

inline SolveResult solve(const Instance& instance, const Criterion& criterion,
                         const SolveOptions& options = {}) {
  return solve_with_gain(instance, CriterionGain(criterion, instance.c()), options);
}

// Utilitarian welfare: saturate the clean allocation with transfer paths from
// any agent into the pool (a maximum-size matroid-union allocation), then
// hand every leftover good to agent 1. Leftover goods are worth 1 to anyone.
inline Allocation utilitarian_optimal(const Instance& instance) {
  Allocation clean(instance.n(), instance.m());
  bool progress = true;
  while (progress) {
    progress = false;
    for (AgentId i = 1; i <= instance.n(); ++i) {
      if (auto path = find_transfer_path(instance, clean, i)) {
        augment_in_place(instance, clean, *path, i);
        progress = true;
      }
    }
  }
  const GoodSet leftover = clean.bundle(0);
  leftover.for_each([&](GoodId g) { clean.move(g, 1); });
  return clean;
}

}  // namespace yankee

#endif  // YANKEE_SOLVER_HPP
