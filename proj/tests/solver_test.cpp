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

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "yankee/yankee.hpp"

namespace yankee {
namespace {

std::vector<Criterion> criteria() {
  return {Criterion::mnw(), Criterion::leximin(), Criterion::pmean(0.5L), Criterion::pmean(-1.0L),
          Criterion::pmean(-2.0L)};
}

SolveOptions checked() {
  SolveOptions o;
  o.check_invariants = true;
  return o;
}

TEST(SolverTest, WorkedExampleLeximin) {
  const auto inst = fixtures::additive_low_high(6, 5);
  const auto r = solve(inst, Criterion::leximin(), checked());
  EXPECT_EQ(sorted_utility_vector(inst, r.allocation), (UtilityVector{5, 5}));
  EXPECT_EQ(r.allocation.bundle(2).size(), 1u);
  EXPECT_EQ(r.allocation.bundle(1).size(), 5u);
}

TEST(SolverTest, WorkedExampleMaxNash) {
  const auto inst = fixtures::additive_low_high(6, 5);
  const auto r = solve(inst, Criterion::mnw(), checked());
  EXPECT_EQ(utility_vector(inst, r.allocation), (UtilityVector{3, 15}));
  EXPECT_EQ(r.allocation.bundle(1).size(), 3u);
  EXPECT_EQ(r.allocation.bundle(2).size(), 3u);
  EXPECT_EQ(nash_welfare(inst, r.allocation).product, 45);
}

TEST(SolverTest, EmptyGoodSet) {
  const auto inst = Instance::make(2, 0, {UniformMatroid{0}, UniformMatroid{0}});
  const auto r = solve(inst, Criterion::mnw(), checked());
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(utility_vector(inst, r.allocation), (UtilityVector{0, 0}));
}

TEST(SolverTest, SingleAgentGetsEverything) {
  const auto inst = generate_instance(Family::kTransversal, 1, 7, 3, 9);
  for (const auto& k : criteria()) {
    const auto r = solve(inst, k, checked());
    EXPECT_EQ(r.allocation.bundle(1), GoodSet::full(7));
  }
}

TEST(SolverTest, AllZeroValuedGoodsStillAllocated) {
  const auto inst = Instance::make(3, 4, {UniformMatroid{0}, MarkedMatroid{GoodSet(4)}});
  const auto r = solve(inst, Criterion::leximin(), checked());
  EXPECT_TRUE(r.allocation.bundle(0).empty());
  EXPECT_EQ(sorted_utility_vector(inst, r.allocation), (UtilityVector{2, 2}));
}

TEST(SolverTest, TraceSemantics) {
  const auto inst = fixtures::additive_low_high(6, 5);
  const auto r = solve(inst, Criterion::mnw());
  ASSERT_EQ(r.trace.size(), r.iterations);
  std::set<AgentId> removed;
  for (const auto& rec : r.trace) {
    // Removed agents never take another high-valued good.
    if (rec.action == Action::kAugmented) {
      EXPECT_EQ(removed.count(rec.agent), 0u);
    }
    if (rec.action == Action::kRemovedFromPlay) {
      EXPECT_TRUE(removed.insert(rec.agent).second);
    }
    if (rec.action == Action::kProvisional) {
      EXPECT_TRUE(removed.count(rec.agent) == 1);
    }
    if (rec.action == Action::kAugmented) {
      EXPECT_FALSE(rec.path.empty());
    }
  }
  EXPECT_EQ(removed, (std::set<AgentId>{1}));
  EXPECT_EQ(r.in_play, (std::vector<AgentId>{2}));
}

TEST(SolverTest, InvariantsAndBoundsOnRandomInstances) {
  for (Family family : all_families()) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const std::size_t n = 1 + seed % 5;
      const std::size_t m = seed % 15;
      const auto inst = generate_instance(family, n, m, 2 + seed % 3, seed + 77);
      for (const auto& k : criteria()) {
        const auto r = solve(inst, k, checked());
        ASSERT_LE(r.iterations, m + n);
        ASSERT_TRUE(r.allocation.bundle(0).empty());
        ASSERT_FALSE(decomposition_error(inst, r.allocation, r.decomposition).has_value());
        GoodSet uni(m);
        for (AgentId i = 1; i <= n; ++i) {
          ASSERT_FALSE(uni.intersects(r.decomposition.supplementary[i]));
          uni |= r.decomposition.supplementary[i];
        }
      }
    }
  }
}

TEST(SolverTest, MatchesReferenceOptimum) {
  for (Family family : all_families()) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const std::size_t n = 1 + seed % 3;
      const std::size_t m = 1 + seed % 6;
      const auto inst = generate_instance(family, n, m, 2 + seed % 2, seed + 4000);
      for (const auto& k : criteria()) {
        const auto r = solve(inst, k);
        const auto best = ref::optimum_sorted(inst, k);
        ASSERT_EQ(ref::compare(k, utility_vector(inst, r.allocation), best), 0)
            << to_string(family) << " seed " << seed << " " << k.name();
      }
    }
  }
}

TEST(SolverTest, MnwNotEf1Counterexample) {
  for (Value c : {2, 3, 5}) {
    const auto inst = fixtures::capped_vs_additive(c);
    const auto r = solve(inst, Criterion::mnw(), checked());
    EXPECT_EQ(r.allocation.bundle(1).size(), 2u) << c;
    EXPECT_EQ(r.allocation.bundle(2).size(), 4u) << c;
    const auto ef1 = check_ef1(inst, r.allocation);
    EXPECT_FALSE(ef1.satisfied);
    ASSERT_TRUE(ef1.witness.has_value());
    EXPECT_EQ(ef1.witness->envious, 1u);
    EXPECT_EQ(ef1.witness->envied, 2u);
  }
}

TEST(SolverTest, LeximinNotEf1Counterexample) {
  for (Value c : {2, 3, 5}) {
    const std::size_t m = 2 * static_cast<std::size_t>(c) + 2;
    const auto inst = fixtures::additive_low_high(m, c);
    const auto r = solve(inst, Criterion::leximin(), checked());
    EXPECT_EQ(r.allocation.bundle(2).size(), 2u) << c;
    EXPECT_EQ(r.allocation.bundle(1).size(), 2 * static_cast<std::size_t>(c)) << c;
    const auto ef1 = check_ef1(inst, r.allocation);
    EXPECT_FALSE(ef1.satisfied);
    ASSERT_TRUE(ef1.witness.has_value());
    EXPECT_EQ(ef1.witness->envious, 2u);
    EXPECT_EQ(ef1.witness->envied, 1u);
  }
}

TEST(SolverTest, CorruptedGainFunctionIsWrong) {
  // Prefers agents with more utility: the reverse of every criterion.
  auto greedy = [](std::span<const Value> u, AgentId i, Value d) {
    return GainValue::rational(u[i - 1] * 100 + d, 1);
  };
  const auto inst = fixtures::additive_low_high(6, 5);
  const auto r = solve_with_gain(inst, greedy);
  EXPECT_NE(sorted_utility_vector(inst, r.allocation), (UtilityVector{5, 5}));
  EXPECT_NE(utility_vector(inst, r.allocation), (UtilityVector{3, 15}));
}

TEST(UtilitarianTest, MatchesReferenceMaximum) {
  for (Family family : all_families()) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const std::size_t n = 1 + seed % 3;
      const std::size_t m = 1 + seed % 6;
      const auto inst = generate_instance(family, n, m, 3, seed + 6000);
      Value best = 0;
      ref::all_utility_vectors(inst, [&](const std::vector<Value>& u) {
        Value s = 0;
        for (Value x : u) s += x;
        best = std::max(best, s);
      });
      EXPECT_EQ(usw(inst, utilitarian_optimal(inst)), best) << to_string(family) << " " << seed;
    }
  }
}

}  // namespace
}  // namespace yankee
