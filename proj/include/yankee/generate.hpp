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

// Seeded random instance families.

#ifndef YANKEE_GENERATE_HPP
#define YANKEE_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "yankee/errors.hpp"
#include "yankee/matroid.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

enum class Family { kMarked, kUniform, kPartition, kTransversal };

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {Family::kMarked, Family::kUniform,
                                               Family::kPartition, Family::kTransversal};
  return families;
}

inline std::string to_string(Family f) {
  switch (f) {
    case Family::kMarked:
      return "marked";
    case Family::kUniform:
      return "uniform";
    case Family::kPartition:
      return "partition";
    case Family::kTransversal:
      return "transversal";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (to_string(f) == name) return f;
  }
  throw ValidationError("unknown instance family '" + name + "'");
}

// mt19937_64 with distribution code of our own, so a seed produces the same
// instance with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + x % span;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; derives independent per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline MatroidSpec random_matroid(Family family, std::size_t m, Rng& rng) {
  switch (family) {
    case Family::kMarked: {
      GoodSet marked(m);
      for (GoodId g = 0; g < m; ++g) {
        if (rng.coin()) marked.insert(g);
      }
      return MarkedMatroid{marked};
    }
    case Family::kUniform:
      return UniformMatroid{static_cast<std::size_t>(rng.uniform(0, m))};
    case Family::kPartition: {
      const std::size_t parts = m == 0 ? 0 : static_cast<std::size_t>(rng.uniform(1, m));
      PartitionMatroid pm;
      pm.parts.assign(parts, GoodSet(m));
      for (GoodId g = 0; g < m; ++g) {
        // One extra bucket leaves a good outside every part (a loop).
        const auto k = static_cast<std::size_t>(rng.uniform(0, parts));
        if (k < parts) pm.parts[k].insert(g);
      }
      for (const auto& part : pm.parts) {
        pm.caps.push_back(static_cast<std::size_t>(rng.uniform(0, part.size())));
      }
      return pm;
    }
    case Family::kTransversal: {
      TransversalMatroid tm;
      tm.slots = static_cast<std::size_t>(rng.uniform(1, m < 2 ? 1 : m - 1));
      tm.adjacency.resize(m);
      for (GoodId g = 0; g < m; ++g) {
        for (std::size_t s = 0; s < tm.slots; ++s) {
          if (rng.coin()) tm.adjacency[g].push_back(s);
        }
      }
      return tm;
    }
  }
  return UniformMatroid{0};
}

// Two goods that can only use the same single slot: each alone adds rank,
// together only one does, so the first agent's valuation is not additive.
inline void plant_shared_slot(TransversalMatroid& tm, std::size_t m, Rng& rng) {
  if (m < 2) return;
  const auto a = static_cast<GoodId>(rng.uniform(0, m - 1));
  auto b = static_cast<GoodId>(rng.uniform(0, m - 2));
  if (b >= a) ++b;
  const auto slot = static_cast<std::size_t>(rng.uniform(0, tm.slots - 1));
  tm.adjacency[a] = {slot};
  tm.adjacency[b] = {slot};
}

inline Instance generate_instance(Family family, std::size_t n, std::size_t m, Value c,
                                  std::uint64_t seed) {
  if (n == 0) throw ValidationError("gen: need at least one agent");
  if (c < 2) throw ValidationError(std::string("gen: ") + kHardnessNote);
  Rng rng(seed);
  std::vector<MatroidSpec> specs;
  for (std::size_t i = 0; i < n; ++i) {
    specs.push_back(random_matroid(family, m, rng));
    if (family == Family::kTransversal && i == 0) {
      plant_shared_slot(std::get<TransversalMatroid>(specs.back()), m, rng);
    }
  }
  return Instance::make(c, m, specs);
}

}  // namespace yankee

#endif  // YANKEE_GENERATE_HPP
