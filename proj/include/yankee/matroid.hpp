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

// Matroid rank functions over the good set. Every bivalued valuation in this
// library is carried by one of these: the rank of a bundle is the number of
// its goods that can simultaneously be worth the high value.

#ifndef YANKEE_MATROID_HPP
#define YANKEE_MATROID_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"

namespace yankee {

// rank(S) = min(|S|, cap).
struct UniformMatroid {
  std::size_t cap = 0;
  friend bool operator==(const UniformMatroid&, const UniformMatroid&) = default;
};

// rank(S) = sum_k min(|S ∩ parts[k]|, caps[k]). Goods outside every part are
// loops.
struct PartitionMatroid {
  std::vector<GoodSet> parts;
  std::vector<std::size_t> caps;
  friend bool operator==(const PartitionMatroid&,
                         const PartitionMatroid&) = default;
};

// rank(S) = |S ∩ marked|; the bivalued additive case.
struct MarkedMatroid {
  GoodSet marked;
  friend bool operator==(const MarkedMatroid&, const MarkedMatroid&) = default;
};

// rank(S) = size of a maximum matching between S and the slots, where
// adjacency[g] lists the slots good g may occupy.
struct TransversalMatroid {
  std::size_t slots = 0;
  std::vector<std::vector<std::size_t>> adjacency;
  friend bool operator==(const TransversalMatroid&,
                         const TransversalMatroid&) = default;
};

// A full rank table indexed by bitmask (bit k = good k). Entries equal to
// kMissing are absent. Only for universes of at most kMaxUniverse goods.
struct ExplicitMatroid {
  static constexpr int kMissing = -1;
  static constexpr std::size_t kMaxUniverse = 20;
  std::vector<int> ranks;
  friend bool operator==(const ExplicitMatroid&, const ExplicitMatroid&) = default;
};

using MatroidSpec = std::variant<UniformMatroid, PartitionMatroid, MarkedMatroid,
                                 TransversalMatroid, ExplicitMatroid>;

inline std::string matroid_type_name(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) return "uniform";
        if constexpr (std::is_same_v<T, PartitionMatroid>) return "partition";
        if constexpr (std::is_same_v<T, MarkedMatroid>) return "marked";
        if constexpr (std::is_same_v<T, TransversalMatroid>) return "transversal";
        if constexpr (std::is_same_v<T, ExplicitMatroid>) return "explicit";
      },
      spec);
}

namespace detail {

// Kuhn's augmenting-path bipartite matching restricted to the goods of S.
inline std::size_t transversal_rank(const TransversalMatroid& t,
                                    const GoodSet& s) {
  std::vector<std::size_t> slot_owner(t.slots, SIZE_MAX);
  std::vector<char> seen(t.slots, 0);
  std::size_t matched = 0;

  // Recursion depth is bounded by the number of slots.
  auto try_match = [&](auto&& self, GoodId g) -> bool {
    for (std::size_t slot : t.adjacency[g]) {
      if (seen[slot]) continue;
      seen[slot] = 1;
      if (slot_owner[slot] == SIZE_MAX || self(self, slot_owner[slot])) {
        slot_owner[slot] = g;
        return true;
      }
    }
    return false;
  };

  s.for_each([&](GoodId g) {
    if (matched == t.slots) return;
    std::fill(seen.begin(), seen.end(), 0);
    if (try_match(try_match, g)) ++matched;
  });
  return matched;
}

// Memo for expensive rank oracles. Shared between copies of a Matroid, so it
// is guarded by a mutex.
class RankCache {
 public:
  static constexpr std::size_t kMaxEntries = 1 << 18;

  std::optional<std::size_t> find(const GoodSet& s) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(s);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void store(const GoodSet& s, std::size_t rank) {
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.size() >= kMaxEntries) table_.clear();
    table_.emplace(s, rank);
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<GoodSet, std::size_t, GoodSetHash> table_;
};

}  // namespace detail

// An immutable matroid over a fixed universe of goods.
class Matroid {
 public:
  Matroid(std::size_t universe, MatroidSpec spec)
      : universe_(universe), spec_(std::move(spec)) {
    std::visit([this](const auto& m) { validate_structure(m); }, spec_);
    if (std::holds_alternative<TransversalMatroid>(spec_)) {
      cache_ = std::make_shared<detail::RankCache>();
    }
  }

  std::size_t universe() const { return universe_; }
  const MatroidSpec& spec() const { return spec_; }

  std::size_t rank(const GoodSet& s) const {
    detail::require(s.universe() == universe_,
                    "Matroid::rank: bundle over a different good set");
    return std::visit([&](const auto& m) { return rank_of(m, s); }, spec_);
  }

  bool is_independent(const GoodSet& s) const { return rank(s) == s.size(); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.universe_ == b.universe_ && a.spec_ == b.spec_;
  }

 private:
  std::size_t rank_of(const UniformMatroid& m, const GoodSet& s) const {
    return std::min(s.size(), m.cap);
  }

  std::size_t rank_of(const PartitionMatroid& m, const GoodSet& s) const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < m.parts.size(); ++k) {
      r += std::min((s & m.parts[k]).size(), m.caps[k]);
    }
    return r;
  }

  std::size_t rank_of(const MarkedMatroid& m, const GoodSet& s) const {
    return (s & m.marked).size();
  }

  std::size_t rank_of(const TransversalMatroid& m, const GoodSet& s) const {
    if (auto hit = cache_->find(s)) return *hit;
    std::size_t r = detail::transversal_rank(m, s);
    cache_->store(s, r);
    return r;
  }

  std::size_t rank_of(const ExplicitMatroid& m, const GoodSet& s) const {
    const std::uint64_t mask = s.to_mask();
    const int r = m.ranks[mask];
    if (r == ExplicitMatroid::kMissing) {
      throw MalformedMatroidError("explicit rank table has no entry for set " +
                                  std::to_string(mask));
    }
    return static_cast<std::size_t>(r);
  }

  void validate_structure(const UniformMatroid&) const {}

  void validate_structure(const PartitionMatroid& m) const {
    if (m.parts.size() != m.caps.size()) {
      throw MalformedMatroidError("partition matroid: parts and caps differ in length");
    }
    GoodSet seen(universe_);
    for (const auto& part : m.parts) {
      if (part.universe() != universe_) {
        throw MalformedMatroidError("partition matroid: part over wrong good set");
      }
      if (part.intersects(seen)) {
        throw MalformedMatroidError("partition matroid: parts are not disjoint");
      }
      seen |= part;
    }
  }

  void validate_structure(const MarkedMatroid& m) const {
    if (m.marked.universe() != universe_) {
      throw MalformedMatroidError("marked matroid: marked set over wrong good set");
    }
  }

  void validate_structure(const TransversalMatroid& m) const {
    if (m.adjacency.size() != universe_) {
      throw MalformedMatroidError("transversal matroid: adjacency must list every good");
    }
    for (const auto& slots : m.adjacency) {
      for (std::size_t slot : slots) {
        if (slot >= m.slots) {
          throw MalformedMatroidError("transversal matroid: slot index out of range");
        }
      }
    }
  }

  void validate_structure(const ExplicitMatroid& m) const {
    if (universe_ > ExplicitMatroid::kMaxUniverse) {
      throw UnsupportedSizeError("explicit matroid: at most " +
                                 std::to_string(ExplicitMatroid::kMaxUniverse) +
                                 " goods supported");
    }
    if (m.ranks.size() != (std::size_t{1} << universe_)) {
      throw MalformedMatroidError("explicit matroid: rank table needs 2^m entries");
    }
  }

  std::size_t universe_;
  MatroidSpec spec_;
  std::shared_ptr<detail::RankCache> cache_;
};

// ---------------------------------------------------------------------------
// Explicit-table validation.

struct AxiomViolation {
  enum class Kind { kMissingEntry, kNormalization, kNonBinaryMarginal, kSubmodularity };

  Kind kind;
  std::uint64_t set = 0;  // bitmask of S
  std::optional<GoodId> good;
  // For kSubmodularity: Δ(S, good) < Δ(S + other, good).
  std::optional<GoodId> other;
  int delta = 0;

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::kMissingEntry:
        os << "missing entry for set " << set;
        break;
      case Kind::kNormalization:
        os << "rank(empty) = " << delta << ", expected 0";
        break;
      case Kind::kNonBinaryMarginal:
        os << "marginal of good " << *good << " on set " << set << " is "
           << delta << ", expected 0 or 1";
        break;
      case Kind::kSubmodularity:
        os << "marginal of good " << *good << " on set " << set
           << " is smaller than on the superset adding good " << *other;
        break;
    }
    return os.str();
  }
};

struct ValidationReport {
  // At most `max_listed` violations are kept; `total` counts all of them.
  std::vector<AxiomViolation> violations;
  std::size_t total = 0;
  bool ok() const { return total == 0; }
};

// Checks normalization, binary marginals and submodularity of an explicit
// rank table. Binary marginals make monotonicity automatic, and together with
// binary marginals the local exchange form
//   r(S+g) + r(S+h) >= r(S+g+h) + r(S)
// is equivalent to full submodularity, so only O(2^m m^2) checks run.
inline ValidationReport validate_explicit(const Matroid& matroid,
                                          std::size_t max_listed = 1000) {
  const auto* table = std::get_if<ExplicitMatroid>(&matroid.spec());
  detail::require(table != nullptr, "validate_explicit: not an explicit matroid");
  const std::size_t m = matroid.universe();
  if (m > ExplicitMatroid::kMaxUniverse) {
    throw UnsupportedSizeError("validate_explicit: at most 20 goods supported");
  }
  const auto& r = table->ranks;
  const std::uint64_t subsets = std::uint64_t{1} << m;

  ValidationReport report;
  auto add = [&](AxiomViolation v) {
    ++report.total;
    if (report.violations.size() < max_listed) report.violations.push_back(v);
  };
  auto missing = [&](std::uint64_t s) { return r[s] == ExplicitMatroid::kMissing; };

  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (missing(s)) add({AxiomViolation::Kind::kMissingEntry, s, std::nullopt, std::nullopt, 0});
  }
  if (!missing(0) && r[0] != 0) {
    add({AxiomViolation::Kind::kNormalization, 0, std::nullopt, std::nullopt, r[0]});
  }
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (missing(s)) continue;
    for (GoodId g = 0; g < m; ++g) {
      const std::uint64_t bit = std::uint64_t{1} << g;
      if ((s & bit) != 0 || missing(s | bit)) continue;
      const int delta = r[s | bit] - r[s];
      if (delta != 0 && delta != 1) {
        add({AxiomViolation::Kind::kNonBinaryMarginal, s, g, std::nullopt, delta});
      }
    }
  }
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (missing(s)) continue;
    for (GoodId g = 0; g < m; ++g) {
      const std::uint64_t gb = std::uint64_t{1} << g;
      if ((s & gb) != 0 || missing(s | gb)) continue;
      for (GoodId h = 0; h < m; ++h) {
        const std::uint64_t hb = std::uint64_t{1} << h;
        if (h == g || (s & hb) != 0 || missing(s | hb) || missing(s | gb | hb)) {
          continue;
        }
        // Each unordered pair is visited twice; report it once.
        if (h < g) continue;
        const int small = r[s | hb] - r[s];
        const int large = r[s | gb | hb] - r[s | gb];
        if (small < large) {
          add({AxiomViolation::Kind::kSubmodularity, s, h, g, small - large});
        }
      }
    }
  }
  return report;
}

}  // namespace yankee

#endif  // YANKEE_MATROID_HPP
