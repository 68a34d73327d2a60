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

// Exchange graph over a clean allocation and transfer-path augmentation.
//
// An edge g -> h exists when the owner j of g can give up g for h without
// losing rank: rank_j(X_j - g + h) = rank_j(X_j). Moving goods backwards
// along a shortest path from F_i (goods that raise i's rank) to a target
// bundle raises i's rank by one, lowers the target owner's by one and leaves
// every other bundle clean with its rank unchanged.

#ifndef YANKEE_EXCHANGE_HPP
#define YANKEE_EXCHANGE_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "yankee/allocation.hpp"
#include "yankee/errors.hpp"
#include "yankee/good_set.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

using Path = std::vector<GoodId>;

// Goods whose addition raises agent i's rank on top of the clean bundle X_i.
inline GoodSet f_set(const Instance& instance, const Allocation& clean, AgentId i) {
  const GoodSet& bundle = clean.bundle(i);
  const std::size_t base = bundle.size();
  GoodSet out(instance.m());
  for (GoodId g = 0; g < instance.m(); ++g) {
    if (bundle.contains(g)) continue;
    if (instance.rank(i, bundle.with(g)) == base + 1) out.insert(g);
  }
  return out;
}

inline bool has_exchange_edge(const Instance& instance, const Allocation& clean,
                              GoodId from, GoodId to) {
  if (from == to) return false;
  const AgentId j = clean.owner(from);
  const GoodSet& bundle = clean.bundle(j);
  if (bundle.contains(to)) return false;
  return instance.rank(j, bundle.without(from).with(to)) == bundle.size();
}

// Breadth-first search from `sources` to any good in `targets`, querying
// edges lazily through has_edge(u, v). Sources are seeded and successors
// expanded in ascending GoodId order, so the queue order within each layer
// is the lexicographic order of the paths reaching those goods and the first
// target found ends the lexicographically smallest shortest path.
template <typename EdgeFn>
std::optional<Path> bfs_shortest_path(std::size_t m, const GoodSet& sources,
                                      const GoodSet& targets, EdgeFn&& has_edge) {
  if (auto hit = (sources & targets).first()) return Path{*hit};

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(m, kNone);
  GoodSet unvisited = GoodSet::full(m) - sources;
  std::deque<GoodId> queue;
  sources.for_each([&](GoodId g) { queue.push_back(g); });

  while (!queue.empty()) {
    const GoodId u = queue.front();
    queue.pop_front();
    std::optional<GoodId> found;
    // Snapshot: `unvisited` shrinks while we scan it.
    const GoodSet frontier = unvisited;
    frontier.for_each([&](GoodId v) {
      if (found || !has_edge(u, v)) return;
      unvisited.erase(v);
      parent[v] = u;
      if (targets.contains(v)) {
        found = v;
      } else {
        queue.push_back(v);
      }
    });
    if (found) {
      Path path;
      for (GoodId g = *found; g != kNone; g = parent[g]) path.push_back(g);
      return Path(path.rbegin(), path.rend());
    }
  }
  return std::nullopt;
}

// Materialized exchange graph, used for inspection and DOT dumps. The solver
// uses the lazy search in find_transfer_path instead.
class ExchangeGraph {
 public:
  ExchangeGraph(std::vector<GoodSet> successors, std::vector<AgentId> owners)
      : successors_(std::move(successors)), owners_(std::move(owners)) {}

  std::size_t size() const { return successors_.size(); }
  const GoodSet& successors(GoodId g) const { return successors_.at(g); }
  bool has_edge(GoodId from, GoodId to) const { return successors_.at(from).contains(to); }
  AgentId owner(GoodId g) const { return owners_.at(g); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& s : successors_) total += s.size();
    return total;
  }

  std::string to_dot(const Instance& instance) const {
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (GoodId g = 0; g < size(); ++g) {
      os << "  n" << g << " [label=\"" << instance.good_name(g) << "\\nowner "
         << (owners_[g] == 0 ? std::string("pool") : instance.agent_name(owners_[g]))
         << "\"];\n";
    }
    for (GoodId g = 0; g < size(); ++g) {
      successors_[g].for_each([&](GoodId h) { os << "  n" << g << " -> n" << h << ";\n"; });
    }
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<GoodSet> successors_;
  std::vector<AgentId> owners_;
};

inline ExchangeGraph build_exchange_graph(const Instance& instance, const Allocation& clean) {
  detail::require(is_clean(instance, clean), "build_exchange_graph: allocation is not clean");
  const std::size_t m = instance.m();
  std::vector<GoodSet> successors(m, GoodSet(m));
  for (GoodId g = 0; g < m; ++g) {
    for (GoodId h = 0; h < m; ++h) {
      if (has_exchange_edge(instance, clean, g, h)) successors[g].insert(h);
    }
  }
  return ExchangeGraph(std::move(successors), clean.owners());
}

inline std::optional<Path> shortest_path(const ExchangeGraph& graph, const GoodSet& sources,
                                         const GoodSet& targets) {
  return bfs_shortest_path(graph.size(), sources, targets,
                           [&](GoodId u, GoodId v) { return graph.has_edge(u, v); });
}

// Shortest path from F_i(X) to the pool X_0, with edges evaluated on demand.
inline std::optional<Path> find_transfer_path(const Instance& instance, const Allocation& clean,
                                              AgentId i) {
  const GoodSet sources = f_set(instance, clean, i);
  const GoodSet& targets = clean.bundle(0);
  // Cache X_j - u for the node being expanded.
  GoodId cached_from = static_cast<GoodId>(-1);
  GoodSet reduced;
  std::size_t full_rank = 0;
  AgentId owner = 0;
  return bfs_shortest_path(instance.m(), sources, targets, [&](GoodId u, GoodId v) {
    if (u != cached_from) {
      cached_from = u;
      owner = clean.owner(u);
      reduced = clean.bundle(owner).without(u);
      full_rank = clean.bundle(owner).size();
    }
    if (clean.bundle(owner).contains(v)) return false;
    if (owner == 0) return true;
    reduced.insert(v);
    const bool edge = instance.rank(owner, reduced) == full_rank;
    reduced.erase(v);
    return edge;
  });
}

// Transfers goods backwards along `path` and gives its first good to
// `receiver`. The path must be a shortest path from F_receiver(X) into some
// other bundle; the result is checked (sizes and cleanness of every touched
// bundle) and any violation raises InternalInvariantError.
inline void augment_in_place(const Instance& instance, Allocation& clean, const Path& path,
                             AgentId receiver) {
  auto fail = [](const std::string& what) {
    throw InternalInvariantError("augment: " + what);
  };
  if (path.empty()) fail("empty path");
  if (receiver > instance.n()) fail("receiver out of range");
  {
    GoodSet seen(instance.m());
    for (GoodId g : path) {
      if (g >= instance.m() || seen.contains(g)) fail("path repeats or leaves the good set");
      seen.insert(g);
    }
  }
  const GoodId head = path.front();
  const AgentId loser = clean.owner(path.back());
  if (loser == receiver) fail("path ends in the receiver's own bundle");
  if (clean.bundle(receiver).contains(head) ||
      instance.rank(receiver, clean.bundle(receiver).with(head)) !=
          clean.bundle(receiver).size() + 1) {
    fail("path does not start in the receiver's F-set");
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!has_exchange_edge(instance, clean, path[k], path[k + 1])) {
      fail("missing exchange edge on path");
    }
  }

  std::vector<std::size_t> sizes_before(instance.n() + 1);
  for (AgentId a = 0; a <= instance.n(); ++a) sizes_before[a] = clean.bundle(a).size();

  // Owners before the transfer.
  std::vector<AgentId> holders;
  holders.reserve(path.size());
  for (GoodId g : path) holders.push_back(clean.owner(g));
  for (std::size_t k = path.size() - 1; k >= 1; --k) clean.move(path[k], holders[k - 1]);
  clean.move(head, receiver);

  for (AgentId a = 0; a <= instance.n(); ++a) {
    std::size_t expected = sizes_before[a];
    if (a == receiver) ++expected;
    if (a == loser) --expected;
    if (clean.bundle(a).size() != expected) fail("bundle sizes changed unexpectedly");
  }
  for (std::size_t k = 0; k < holders.size(); ++k) {
    if (!is_clean_bundle(instance, holders[k], clean.bundle(holders[k]))) {
      fail("an intermediate bundle is no longer clean (path not shortest?)");
    }
  }
  if (!is_clean_bundle(instance, receiver, clean.bundle(receiver))) {
    fail("receiver bundle is not clean (path not shortest?)");
  }
}

inline Allocation augment(const Instance& instance, Allocation clean, const Path& path,
                          AgentId receiver) {
  augment_in_place(instance, clean, path, receiver);
  return clean;
}

}  // namespace yankee

#endif  // YANKEE_EXCHANGE_HPP
