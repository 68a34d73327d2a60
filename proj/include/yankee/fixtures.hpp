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

// Small hand-built instances with known answers.

#ifndef YANKEE_FIXTURES_HPP
#define YANKEE_FIXTURES_HPP

#include <cstddef>
#include <vector>

#include "yankee/errors.hpp"
#include "yankee/matroid.hpp"
#include "yankee/valuation.hpp"

namespace yankee::fixtures {

// Agent 1 values every good at 1, agent 2 values every good at c.
// With m = 6, c = 5 leximin gives (5, 5) and max Nash welfare (3, 15); with
// m = 2c + 2 no leximin allocation is EF1.
inline Instance additive_low_high(std::size_t m, Value c) {
  return Instance::make(c, m, {MarkedMatroid{GoodSet(m)}, MarkedMatroid{GoodSet::full(m)}});
}

// Agent 1 values its first two goods at c and the rest at 1; agent 2 values
// everything at c. Over six goods no max Nash welfare allocation is EF1.
inline Instance capped_vs_additive(Value c) {
  constexpr std::size_t m = 6;
  return Instance::make(c, m, {UniformMatroid{2}, MarkedMatroid{GoodSet::full(m)}});
}

// Agent 1 values everything at c; agent 2 values only one good at c. The
// allocation ({g1, g2}, {g3, g4}) has two valid decompositions.
inline Instance two_decompositions(Value c) {
  constexpr std::size_t m = 4;
  return Instance::make(c, m, {MarkedMatroid{GoodSet::full(m)}, UniformMatroid{1}});
}

// n agents, n + c n (n - 1) goods; agents 1..n-1 value goods at 1, agent n at
// c. Leximin gives agent n only n goods while their maximin share is
// c (1 + c (n - 1)).
inline Instance leximin_share_gap(std::size_t n, Value c) {
  detail::require(n >= 2, "leximin_share_gap: n >= 2");
  const std::size_t m = n + static_cast<std::size_t>(c) * n * (n - 1);
  std::vector<MatroidSpec> specs(n - 1, MarkedMatroid{GoodSet(m)});
  specs.push_back(MarkedMatroid{GoodSet::full(m)});
  return Instance::make(c, m, specs);
}

// Odd n, n + c (n - 1) / 2 goods split into G1 (n goods), G2 (n - 1 goods)
// and G3 (the rest). Agent 1 values one good from each of G1 and G2 at c;
// agents 2..(n+1)/2 value G2 at c; the others value G1 ∪ G3 at c. Max Nash
// welfare leaves agent 1 with utility about 2/5 of their maximin share.
inline Instance mnw_share_gap(std::size_t n, Value c) {
  detail::require(n >= 3 && n % 2 == 1, "mnw_share_gap: odd n >= 3");
  detail::require((static_cast<std::size_t>(c) * (n - 1)) % 2 == 0,
                  "mnw_share_gap: c (n - 1) must be even");
  const std::size_t half = static_cast<std::size_t>(c) * (n - 1) / 2;
  detail::require(half >= n - 1, "mnw_share_gap: c too small");
  const std::size_t m = n + half;
  GoodSet g1(m), g2(m), g3(m);
  for (GoodId g = 0; g < m; ++g) {
    if (g < n) {
      g1.insert(g);
    } else if (g < 2 * n - 1) {
      g2.insert(g);
    } else {
      g3.insert(g);
    }
  }
  std::vector<MatroidSpec> specs;
  specs.push_back(PartitionMatroid{{g1, g2}, {1, 1}});
  for (std::size_t j = 2; j <= n; ++j) {
    if (j <= (n + 1) / 2) {
      specs.push_back(MarkedMatroid{g2});
    } else {
      specs.push_back(MarkedMatroid{g1 | g3});
    }
  }
  return Instance::make(c, m, specs);
}

}  // namespace yankee::fixtures

#endif  // YANKEE_FIXTURES_HPP
