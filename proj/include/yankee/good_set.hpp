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

#ifndef YANKEE_GOOD_SET_HPP
#define YANKEE_GOOD_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "yankee/errors.hpp"

namespace yankee {

// Goods are dense indices 0..m-1; agents are 0 (the unallocated pool) and
// 1..n.
using GoodId = std::size_t;
using AgentId = std::size_t;

// A subset of the goods {0, ..., universe-1}, stored as a packed bitset.
// Iteration is always in ascending GoodId order.
class GoodSet {
 public:
  GoodSet() = default;
  explicit GoodSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  GoodSet(std::size_t universe, std::initializer_list<GoodId> goods)
      : GoodSet(universe) {
    for (GoodId g : goods) insert(g);
  }
  GoodSet(std::size_t universe, std::span<const GoodId> goods)
      : GoodSet(universe) {
    for (GoodId g : goods) insert(g);
  }

  static GoodSet full(std::size_t universe) {
    GoodSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  // Bit k of `mask` is good k. Requires universe <= 64.
  static GoodSet from_mask(std::size_t universe, std::uint64_t mask) {
    detail::require(universe <= 64, "GoodSet::from_mask: universe > 64");
    GoodSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::uint64_t to_mask() const {
    detail::require(universe_ <= 64, "GoodSet::to_mask: universe > 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t universe() const { return universe_; }

  bool contains(GoodId g) const {
    return g < universe_ && ((words_[g >> 6] >> (g & 63)) & 1U) != 0;
  }

  void insert(GoodId g) {
    check(g);
    words_[g >> 6] |= std::uint64_t{1} << (g & 63);
  }

  void erase(GoodId g) {
    check(g);
    words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63));
  }

  GoodSet with(GoodId g) const {
    GoodSet s = *this;
    s.insert(g);
    return s;
  }

  GoodSet without(GoodId g) const {
    GoodSet s = *this;
    s.erase(g);
    return s;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::optional<GoodId> first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) {
        return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
      }
    }
    return std::nullopt;
  }

  // Lowest good in *this that is not in `other`.
  std::optional<GoodId> first_not_in(const GoodSet& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k] & ~other.words_[k];
      if (w != 0) {
        return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      }
    }
    return std::nullopt;
  }

  bool is_subset_of(const GoodSet& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }

  bool intersects(const GoodSet& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }

  GoodSet& operator|=(const GoodSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  GoodSet& operator&=(const GoodSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  // Set difference.
  GoodSet& operator-=(const GoodSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend GoodSet operator|(GoodSet a, const GoodSet& b) { return a |= b; }
  friend GoodSet operator&(GoodSet a, const GoodSet& b) { return a &= b; }
  friend GoodSet operator-(GoodSet a, const GoodSet& b) { return a -= b; }

  friend bool operator==(const GoodSet&, const GoodSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<GoodId> to_vector() const {
    std::vector<GoodId> out;
    out.reserve(size());
    for_each([&](GoodId g) { out.push_back(g); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check(GoodId g) const {
    detail::require(g < universe_, "GoodSet: good index out of range");
  }
  void same_universe(const GoodSet& other) const {
    detail::require(universe_ == other.universe_,
                    "GoodSet: mismatched universes");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GoodSetHash {
  std::size_t operator()(const GoodSet& s) const { return s.hash(); }
};

}  // namespace yankee

#endif  // YANKEE_GOOD_SET_HPP
