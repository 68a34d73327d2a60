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

#include <bit>
#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "yankee/yankee.hpp"

namespace yankee {
namespace {

GoodSet set_of(std::size_t m, std::initializer_list<GoodId> goods) { return GoodSet(m, goods); }

TEST(GoodSetTest, BasicOperations) {
  GoodSet s(70);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(65);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(65));
  EXPECT_EQ(s.first(), 3u);
  EXPECT_EQ(s.to_vector(), (std::vector<GoodId>{3, 65}));
  const GoodSet full = GoodSet::full(70);
  EXPECT_EQ(full.size(), 70u);
  EXPECT_EQ((full - s).size(), 68u);
  EXPECT_EQ(full.first_not_in(GoodSet(70, {0, 1, 2})), 3u);
  EXPECT_TRUE(s.is_subset_of(full));
  EXPECT_FALSE(full.is_subset_of(s));
  EXPECT_EQ(s.without(3).with(4), GoodSet(70, {4, 65}));
}

TEST(GoodSetTest, MaskRoundTrip) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    EXPECT_EQ(GoodSet::from_mask(6, mask).to_mask(), mask);
  }
}

TEST(MatroidTest, ExampleRanks) {
  const Matroid uniform(4, UniformMatroid{1});
  EXPECT_EQ(uniform.rank(set_of(4, {2, 3})), 1u);
  EXPECT_EQ(uniform.rank(GoodSet(4)), 0u);

  const Matroid partition(3, PartitionMatroid{{set_of(3, {0, 1}), set_of(3, {2})}, {1, 1}});
  EXPECT_EQ(partition.rank(GoodSet::full(3)), 2u);

  const Matroid marked(5, MarkedMatroid{set_of(5, {1, 3})});
  EXPECT_EQ(marked.rank(set_of(5, {0, 1, 2, 3})), 2u);
}

TEST(MatroidTest, PartitionRankMatchesBruteForce) {
  const MatroidSpec spec = PartitionMatroid{{set_of(3, {0, 1}), set_of(3, {2})}, {1, 1}};
  const Matroid m(3, spec);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    EXPECT_EQ(m.rank(GoodSet::from_mask(3, mask)), ref::rank(spec, 3, mask)) << mask;
  }
}

TEST(MatroidTest, TransversalRankIsMaximumMatching) {
  // g0 and g1 only fit slot 0; g2 fits slots 0 and 1.
  const MatroidSpec spec = TransversalMatroid{2, {{0}, {0}, {0, 1}}};
  const Matroid m(3, spec);
  EXPECT_EQ(m.rank(set_of(3, {0, 1})), 1u);
  EXPECT_EQ(m.rank(set_of(3, {0, 2})), 2u);
  EXPECT_EQ(m.rank(GoodSet::full(3)), 2u);
}

TEST(MatroidTest, StructuralValidation) {
  EXPECT_THROW(Matroid(3, PartitionMatroid{{set_of(3, {0, 1}), set_of(3, {1})}, {1, 1}}),
               MalformedMatroidError);
  EXPECT_THROW(Matroid(3, PartitionMatroid{{set_of(3, {0})}, {1, 1}}), MalformedMatroidError);
  EXPECT_THROW(Matroid(2, TransversalMatroid{1, {{0}, {1}}}), MalformedMatroidError);
  EXPECT_THROW(Matroid(2, ExplicitMatroid{{0, 1, 1}}), MalformedMatroidError);
  EXPECT_THROW(Matroid(3, MarkedMatroid{GoodSet(4)}), MalformedMatroidError);
}

TEST(MatroidTest, ExplicitMissingEntryIsMalformed) {
  const Matroid m(2, ExplicitMatroid{{0, 1, ExplicitMatroid::kMissing, 1}});
  EXPECT_EQ(m.rank(set_of(2, {0})), 1u);
  EXPECT_THROW(m.rank(set_of(2, {1})), MalformedMatroidError);
}

// Every family, random instances, every (S, g, h) for m <= 7: binary
// marginals, submodularity, and agreement with the definitional rank.
TEST(MatroidTest, AxiomsExhaustiveOnRandomFamilies) {
  for (Family family : all_families()) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      Rng rng(seed * 7 + 1);
      const std::size_t m = 1 + seed % 7;
      const MatroidSpec spec = random_matroid(family, m, rng);
      const Matroid mat(m, spec);
      const std::uint64_t subsets = std::uint64_t{1} << m;
      std::vector<std::size_t> r(subsets);
      for (std::uint64_t s = 0; s < subsets; ++s) {
        r[s] = mat.rank(GoodSet::from_mask(m, s));
        ASSERT_EQ(r[s], ref::rank(spec, m, s)) << to_string(family) << " seed " << seed;
      }
      ASSERT_EQ(r[0], 0u);
      for (std::uint64_t s = 0; s < subsets; ++s) {
        for (GoodId g = 0; g < m; ++g) {
          const std::uint64_t gb = std::uint64_t{1} << g;
          if (s & gb) continue;
          const auto dg = r[s | gb] - r[s];
          ASSERT_TRUE(dg == 0 || dg == 1);
          for (GoodId h = 0; h < m; ++h) {
            const std::uint64_t hb = std::uint64_t{1} << h;
            if (h == g || (s & hb)) continue;
            ASSERT_GE(dg, r[s | hb | gb] - r[s | hb]);
          }
        }
      }
    }
  }
}

std::vector<int> table_of(const Matroid& m) {
  std::vector<int> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.universe()); ++s) {
    out.push_back(static_cast<int>(m.rank(GoodSet::from_mask(m.universe(), s))));
  }
  return out;
}

TEST(ValidateExplicitTest, ValidUniformTableHasNoViolations) {
  const Matroid uniform(4, UniformMatroid{2});
  const Matroid table(4, ExplicitMatroid{table_of(uniform)});
  const auto report = validate_explicit(table);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.violations.empty());
}

TEST(ValidateExplicitTest, NonBinaryMarginalReported) {
  // rank({g1, g2}) = 2 while rank({g1}) = 0.
  const Matroid table(2, ExplicitMatroid{{0, 0, 0, 2}});
  const auto report = validate_explicit(table);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == AxiomViolation::Kind::kNonBinaryMarginal && v.set == 1 && v.good == 1u) {
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(ValidateExplicitTest, NormalizationAndMissingReported) {
  const Matroid table(1, ExplicitMatroid{{1, ExplicitMatroid::kMissing}});
  const auto report = validate_explicit(table);
  EXPECT_EQ(report.total, 2u);
}

TEST(ValidateExplicitTest, PlantedCorruptionAlwaysFound) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Rng gen(static_cast<std::uint64_t>(trial));
    const std::size_t m = 2 + trial % 5;
    const Matroid base(m, random_matroid(Family::kTransversal, m, gen));
    auto ranks = table_of(base);
    const std::size_t victim = 1 + rng() % (ranks.size() - 1);
    ranks[victim] += (ranks[victim] > 0 && rng() % 2) ? -1 : 1;
    // Reference: does any local axiom fail?
    bool broken = false;
    for (std::uint64_t s = 0; s < ranks.size(); ++s) {
      for (GoodId g = 0; g < m; ++g) {
        const std::uint64_t gb = std::uint64_t{1} << g;
        if (s & gb) continue;
        const int d = ranks[s | gb] - ranks[s];
        if (d != 0 && d != 1) broken = true;
        for (GoodId h = 0; h < m; ++h) {
          const std::uint64_t hb = std::uint64_t{1} << h;
          if (h == g || (s & hb)) continue;
          if (d < ranks[s | gb | hb] - ranks[s | hb]) broken = true;
        }
      }
    }
    const auto report = validate_explicit(Matroid(m, ExplicitMatroid{ranks}));
    EXPECT_EQ(!report.ok(), broken) << trial;
  }
}

TEST(ValidateExplicitTest, OversizedUniverseRejected) {
  EXPECT_THROW(Matroid(21, ExplicitMatroid{}), UnsupportedSizeError);
}

}  // namespace
}  // namespace yankee
