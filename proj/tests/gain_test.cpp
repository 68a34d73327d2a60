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

#include <compare>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "yankee/yankee.hpp"

namespace yankee {
namespace {

int sign(std::weak_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<Criterion> criteria() {
  return {Criterion::mnw(), Criterion::leximin(), Criterion::pmean(0.5L), Criterion::pmean(-1.0L),
          Criterion::pmean(-2.0L)};
}

TEST(GainValueTest, TierOrder) {
  EXPECT_LT(GainValue::bottom(), GainValue::rational(-1000, 1));
  EXPECT_LT(GainValue::rational(1000, 1), GainValue::zero_escape(1));
  EXPECT_LT(GainValue::zero_escape(1), GainValue::zero_escape(2));
  EXPECT_EQ(GainValue::rational(4, 2), GainValue::rational(2, 1));
  EXPECT_LT(GainValue::rational(3, 2), GainValue::rational(5, 3));
  EXPECT_EQ(GainValue::real(1.0L), GainValue::real(1.0L + 1e-15L));
  EXPECT_EQ(GainValue::zero_escape(3).to_string(), "M*3");
  EXPECT_EQ(GainValue::rational(8, 5).to_string(), "8/5");
  EXPECT_EQ(GainValue::bottom().to_string(), "-inf");
}

TEST(GainTest, TableValues) {
  const std::vector<Value> u = {0, 3, 5};
  EXPECT_EQ(gain(Criterion::mnw(), 5, u, 1, 5), GainValue::zero_escape(5));
  EXPECT_EQ(gain(Criterion::mnw(), 5, u, 2, 5), GainValue::rational(8, 3));
  EXPECT_EQ(gain(Criterion::leximin(), 5, u, 2, 1), GainValue::rational(-17, 1));
  EXPECT_EQ(gain(Criterion::pmean(0.5L), 5, u, 1, 1), GainValue::zero_escape(1));
  EXPECT_THROW(gain(Criterion::mnw(), 5, u, 2, 2), PreconditionError);
  EXPECT_THROW(Criterion::pmean(0), UnsupportedCriterionError);
  EXPECT_THROW(Criterion::pmean(1), UnsupportedCriterionError);
}

// Gain order, monotonicity and priority of the poorer agent, plus
// gain(i, c) > gain(i, 1), on random vectors.
TEST(GainTest, AxiomsOnRandomVectors) {
  std::mt19937_64 rng(2024);
  const Value cs[] = {2, 3, 5};
  for (const auto& k : criteria()) {
    for (int trial = 0; trial < 2000; ++trial) {
      const Value c = cs[trial % 3];
      const std::size_t n = 1 + rng() % 6;
      auto u = ref::random_utilities(rng, n, 50);
      const CriterionGain phi(k, c);
      for (AgentId i = 1; i <= n; ++i) {
        ASSERT_GT(phi(u, i, c), phi(u, i, 1)) << k.name();
        for (Value d : {Value{1}, c}) {
          // Raising one's own utility never raises the gain.
          auto v = u;
          v[i - 1] += 1 + static_cast<Value>(rng() % 5);
          ASSERT_GE(phi(u, i, d), phi(v, i, d));
          for (AgentId j = 1; j <= n; ++j) {
            // The poorer agent gains more; equals tie.
            if (u[i - 1] < u[j - 1]) {
              ASSERT_GT(phi(u, i, d), phi(u, j, d));
            }
            if (u[i - 1] == u[j - 1]) {
              ASSERT_EQ(phi(u, i, d), phi(u, j, d));
            }
            // Gain order is the order of the successor vectors.
            for (Value e : {Value{1}, c}) {
              auto a = u;
              auto b = u;
              a[i - 1] += d;
              b[j - 1] += e;
              ASSERT_EQ(sign(phi(u, i, d) <=> phi(u, j, e)), ref::compare(k, a, b))
                  << k.name() << " i=" << i << " d=" << d << " j=" << j << " e=" << e;
            }
          }
        }
      }
    }
  }
}

TEST(CriterionTest, WelfareComparison) {
  const std::vector<Value> a = {3, 15};
  const std::vector<Value> b = {5, 5};
  EXPECT_TRUE(std::is_gt(compare_welfare(Criterion::mnw(), a, b)));
  EXPECT_TRUE(std::is_lt(compare_welfare(Criterion::leximin(), a, b)));
  // Genuine ties.
  EXPECT_TRUE(std::is_eq(compare_welfare(Criterion::mnw(), std::vector<Value>{2, 6}, std::vector<Value>{3, 4})));
  EXPECT_TRUE(std::is_eq(compare_welfare(Criterion::pmean(0.5L), std::vector<Value>{1, 9}, std::vector<Value>{4, 4})));
  // Positive count dominates.
  EXPECT_TRUE(std::is_gt(compare_welfare(Criterion::mnw(), std::vector<Value>{1, 1}, std::vector<Value>{0, 100})));
  EXPECT_TRUE(std::is_gt(compare_welfare(Criterion::pmean(-1), std::vector<Value>{1, 1}, std::vector<Value>{0, 100})));
}

TEST(CriterionTest, WelfareValues) {
  const std::vector<Value> u = {3, 15};
  const auto nw = nash_welfare(u);
  EXPECT_EQ(nw.positive_count, 2u);
  EXPECT_EQ(nw.product, 45);
  const std::vector<Value> zeros = {0, 0};
  EXPECT_EQ(nash_welfare(zeros).positive_count, 0u);
  EXPECT_EQ(nash_welfare(zeros).product, 1);
  EXPECT_NEAR(static_cast<double>(pmean_value(u, 1)), 9.0, 1e-12);
  EXPECT_EQ(utilitarian_welfare(u), 18);
  EXPECT_EQ(Criterion::pmean(0.5L).name(), "pmean(0.5)");
}

}  // namespace
}  // namespace yankee
