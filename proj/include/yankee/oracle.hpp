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

// Exhaustive ground truth for small instances.

#ifndef YANKEE_ORACLE_HPP
#define YANKEE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "yankee/allocation.hpp"
#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/fixtures.hpp"
#include "yankee/generate.hpp"
#include "yankee/solver.hpp"
#include "yankee/valuation.hpp"

namespace yankee {

inline constexpr std::uint64_t kEnumerationCap = 10'000'000;
inline constexpr std::size_t kCertifyMaxGoods = 6;

// (n+1)^m, saturating at UINT64_MAX.
inline std::uint64_t allocation_count(std::size_t n, std::size_t m) {
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < m; ++g) {
    if (total > UINT64_MAX / (n + 1)) return UINT64_MAX;
    total *= n + 1;
  }
  return total;
}

// Visits every owner assignment (good -> agent in 0..n) in mixed-radix order
// with good 0 as the fastest-moving digit.
template <typename Fn>
void for_each_assignment(std::size_t n, std::size_t m, Fn&& visit) {
  if (allocation_count(n, m) > kEnumerationCap) {
    throw UnsupportedSizeError("enumeration: (n+1)^m exceeds " + std::to_string(kEnumerationCap));
  }
  std::vector<AgentId> owners(m, 0);
  while (true) {
    visit(std::span<const AgentId>(owners));
    std::size_t g = 0;
    while (g < m && owners[g] == n) owners[g++] = 0;
    if (g == m) return;
    ++owners[g];
  }
}

template <typename Fn>
void enumerate_allocations(const Instance& instance, Fn&& visit) {
  for_each_assignment(instance.n(), instance.m(), [&](std::span<const AgentId> owners) {
    visit(Allocation::from_owners(instance.n(), owners));
  });
}

namespace detail {

// Fast utility evaluation over owner assignments, through per-agent value
// tables when the good set is small enough.
class UtilityEvaluator {
 public:
  static constexpr std::size_t kTableLimit = 16;

  explicit UtilityEvaluator(const Instance& instance) : instance_(instance) {
    if (instance.m() <= kTableLimit) {
      const std::size_t subsets = std::size_t{1} << instance.m();
      tables_.assign(instance.n(), std::vector<Value>(subsets));
      for (AgentId i = 1; i <= instance.n(); ++i) {
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          tables_[i - 1][mask] = instance.value(i, GoodSet::from_mask(instance.m(), mask));
        }
      }
    }
  }

  void operator()(std::span<const AgentId> owners, UtilityVector& out) const {
    const std::size_t n = instance_.n();
    out.assign(n, 0);
    if (!tables_.empty()) {
      masks_.assign(n + 1, 0);
      for (GoodId g = 0; g < owners.size(); ++g) masks_[owners[g]] |= std::uint64_t{1} << g;
      for (AgentId i = 1; i <= n; ++i) out[i - 1] = tables_[i - 1][masks_[i]];
      return;
    }
    const auto x = Allocation::from_owners(n, owners);
    for (AgentId i = 1; i <= n; ++i) out[i - 1] = instance_.value(i, x.bundle(i));
  }

 private:
  const Instance& instance_;
  std::vector<std::vector<Value>> tables_;
  mutable std::vector<std::uint64_t> masks_;
};

}  // namespace detail

struct OptimumResult {
  UtilityVector best;         // one optimal utility vector
  UtilityVector best_sorted;  // its ascending sort
  std::set<UtilityVector> optimal_vectors;
  std::set<UtilityVector> optimal_sorted;
  std::uint64_t examined = 0;
};

// Max Nash welfare optimum computed a second way: maximize the positive
// count, then the sum of logs, with exact products only to break near-ties.
inline std::set<UtilityVector> mnw_optimal_sorted_by_logsum(const Instance& instance) {
  detail::UtilityEvaluator eval(instance);
  UtilityVector u;
  std::size_t best_count = 0;
  long double best_log = -1;
  BigInt best_product = 0;
  std::set<UtilityVector> optimal;
  for_each_assignment(instance.n(), instance.m(), [&](std::span<const AgentId> owners) {
    eval(owners, u);
    std::size_t count = 0;
    long double log_sum = 0;
    for (Value x : u) {
      if (x > 0) {
        ++count;
        log_sum += std::log(static_cast<long double>(x));
      }
    }
    int order;
    if (optimal.empty() || count != best_count) {
      order = optimal.empty() || count > best_count ? 1 : -1;
    } else if (std::fabs(log_sum - best_log) > 1e-9L) {
      order = log_sum > best_log ? 1 : -1;
    } else {
      const BigInt product = nash_welfare(u).product;
      order = product == best_product ? 0 : (product > best_product ? 1 : -1);
    }
    if (order > 0) {
      best_count = count;
      best_log = log_sum;
      best_product = nash_welfare(u).product;
      optimal.clear();
    }
    if (order >= 0) optimal.insert(sorted_vector(u));
  });
  return optimal;
}

// Optimal utility vectors under `criterion` over every allocation.
inline OptimumResult brute_force_optimum(const Instance& instance, const Criterion& criterion) {
  detail::UtilityEvaluator eval(instance);
  OptimumResult r;
  UtilityVector u;
  for_each_assignment(instance.n(), instance.m(), [&](std::span<const AgentId> owners) {
    eval(owners, u);
    ++r.examined;
    const auto order = r.optimal_vectors.empty() ? std::weak_ordering::greater
                                                 : compare_welfare(criterion, u, r.best);
    if (order > 0) {
      r.best = u;
      r.optimal_vectors.clear();
    }
    if (order >= 0) r.optimal_vectors.insert(u);
  });
  r.best_sorted = sorted_vector(r.best);
  for (const auto& v : r.optimal_vectors) r.optimal_sorted.insert(sorted_vector(v));

  if (criterion.kind == CriterionKind::kMnw) {
    detail::ensure(mnw_optimal_sorted_by_logsum(instance) == r.optimal_sorted,
                   "oracle: max Nash welfare optimum disagrees between evaluation orders");
  }
  return r;
}

// Every decomposition of `x`: per agent, every independent subset of X_i of
// size rank_i(X_i) as the clean part.
template <typename Fn>
void for_each_decomposition(const Instance& instance, const Allocation& x, Fn&& visit) {
  const std::size_t n = instance.n();
  const std::size_t m = instance.m();
  std::vector<std::vector<GoodSet>> choices(n + 1);
  for (AgentId i = 1; i <= n; ++i) {
    const auto goods = x.bundle(i).to_vector();
    const std::size_t r = instance.rank(i, x.bundle(i));
    detail::require(goods.size() <= 20, "for_each_decomposition: bundle too large");
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << goods.size()); ++pick) {
      if (static_cast<std::size_t>(std::popcount(pick)) != r) continue;
      GoodSet t(m);
      for (std::size_t k = 0; k < goods.size(); ++k) {
        if ((pick >> k) & 1U) t.insert(goods[k]);
      }
      if (instance.rank(i, t) == r) choices[i].push_back(t);
    }
  }
  std::vector<std::size_t> pick(n + 1, 0);
  while (true) {
    Decomposition d{Allocation(n, m), std::vector<GoodSet>(n + 1, GoodSet(m))};
    for (AgentId i = 1; i <= n; ++i) {
      const GoodSet& clean = choices[i][pick[i]];
      clean.for_each([&](GoodId g) { d.clean.move(g, i); });
      d.supplementary[i] = x.bundle(i) - clean;
    }
    visit(static_cast<const Decomposition&>(d));
    AgentId i = 1;
    while (i <= n && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
    if (i > n) return;
    ++pick[i];
  }
}

struct CertificationVerdict {
  bool optimal = false;
  bool dominating = false;
  std::size_t optimal_allocations = 0;
  std::size_t decompositions_checked = 0;
  std::string detail;
  bool passed() const { return optimal && dominating; }
};

// Confirms the solver output is optimal under `criterion` and that no optimal
// allocation, under any of its decompositions, dominates it.
inline CertificationVerdict certify_dominating(const Instance& instance, const SolveResult& output,
                                               const Criterion& criterion) {
  if (instance.m() > kCertifyMaxGoods) {
    throw UnsupportedSizeError("certify_dominating: at most " +
                               std::to_string(kCertifyMaxGoods) + " goods");
  }
  CertificationVerdict v;
  if (auto error = decomposition_error(instance, output.allocation, output.decomposition)) {
    v.detail = "solver decomposition invalid: " + *error;
    return v;
  }
  const auto optimum = brute_force_optimum(instance, criterion);
  const auto mine = utility_vector(instance, output.allocation);
  if (compare_welfare(criterion, mine, optimum.best) != 0) {
    v.detail = "solver output is not optimal";
    return v;
  }
  v.optimal = true;

  detail::UtilityEvaluator eval(instance);
  UtilityVector u;
  v.dominating = true;
  for_each_assignment(instance.n(), instance.m(), [&](std::span<const AgentId> owners) {
    if (!v.dominating) return;
    eval(owners, u);
    if (compare_welfare(criterion, u, optimum.best) != 0) return;
    ++v.optimal_allocations;
    const auto y = Allocation::from_owners(instance.n(), owners);
    for_each_decomposition(instance, y, [&](const Decomposition& yd) {
      if (!v.dominating) return;
      ++v.decompositions_checked;
      if (compare_domination(instance, y, yd, output.allocation, output.decomposition) ==
          Domination::kDominates) {
        v.dominating = false;
        v.detail = "an optimal allocation dominates the solver output";
      }
    });
  });
  return v;
}

// ---------------------------------------------------------------------------
// Randomized solver-versus-oracle campaigns.

inline std::vector<Criterion> default_oracle_criteria() {
  return {Criterion::mnw(), Criterion::leximin(), Criterion::pmean(0.5L), Criterion::pmean(-1.0L),
          Criterion::pmean(-2.0L)};
}

struct OracleCheckConfig {
  std::vector<Family> families = all_families();
  std::size_t count = 200;  // instances per family
  std::size_t max_n = 3;
  std::size_t max_m = 6;
  std::vector<Value> cs = {2, 3};
  std::vector<Criterion> criteria = default_oracle_criteria();
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool include_fixture = true;  // the 6-good two-agent additive example
};

struct OracleMismatch {
  std::string label;
  Criterion criterion;
  Instance instance;
  UtilityVector solver_sorted;
  UtilityVector oracle_sorted;
  std::string error;  // non-empty when the solver threw
};

struct OracleCheckSummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<OracleMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

struct OracleCase {
  std::string label;
  Instance instance;
};

inline std::vector<OracleCase> oracle_cases(const OracleCheckConfig& config) {
  std::vector<OracleCase> cases;
  if (config.include_fixture) {
    cases.push_back({"fixture:additive_low_high(6,5)", fixtures::additive_low_high(6, 5)});
  }
  for (Family family : config.families) {
    for (std::size_t k = 0; k < config.count; ++k) {
      const std::uint64_t seed =
          mix_seed(config.seed ^ mix_seed(static_cast<std::uint64_t>(family) * 1000003ULL + k));
      Rng rng(seed);
      const auto n = static_cast<std::size_t>(rng.uniform(1, config.max_n));
      const auto m = static_cast<std::size_t>(rng.uniform(1, config.max_m));
      const Value c = config.cs[static_cast<std::size_t>(rng.uniform(0, config.cs.size() - 1))];
      const std::uint64_t instance_seed = rng.next();
      cases.push_back({to_string(family) + ":n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                           ",c=" + std::to_string(c) + ",seed=" + std::to_string(instance_seed),
                       generate_instance(family, n, m, c, instance_seed)});
    }
  }
  return cases;
}

// Runs `solver(instance, criterion) -> SolveResult` against the oracle on
// every case. Work is split across `jobs` threads; results are merged in case
// order, so the summary does not depend on the thread count.
template <typename SolverFn>
OracleCheckSummary run_oracle_check(const OracleCheckConfig& config, SolverFn&& solver) {
  const auto cases = oracle_cases(config);
  auto run_case = [&](const OracleCase& oc) {
    std::vector<OracleMismatch> found;
    for (const auto& criterion : config.criteria) {
      const auto optimum = brute_force_optimum(oc.instance, criterion);
      OracleMismatch mm{oc.label, criterion, oc.instance, {}, optimum.best_sorted, {}};
      try {
        const SolveResult out = solver(oc.instance, criterion);
        mm.solver_sorted = sorted_utility_vector(oc.instance, out.allocation);
        if (optimum.optimal_sorted.count(mm.solver_sorted) != 0) continue;
        // p-mean ties within tolerance may pick a different vector of equal value.
        if (compare_welfare(criterion, mm.solver_sorted, optimum.best_sorted) == 0) continue;
      } catch (const std::exception& e) {
        mm.error = e.what();
      }
      found.push_back(std::move(mm));
    }
    return found;
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, cases.size()));
  std::vector<std::vector<OracleMismatch>> per_case(cases.size());
  if (jobs == 1) {
    for (std::size_t k = 0; k < cases.size(); ++k) per_case[k] = run_case(cases[k]);
  } else {
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < cases.size(); k += jobs) per_case[k] = run_case(cases[k]);
      }));
    }
    for (auto& f : workers) f.get();
  }

  OracleCheckSummary summary;
  summary.instances = cases.size();
  summary.checks = cases.size() * config.criteria.size();
  for (auto& found : per_case) {
    for (auto& mm : found) summary.mismatches.push_back(std::move(mm));
  }
  return summary;
}

inline OracleCheckSummary run_oracle_check(const OracleCheckConfig& config) {
  return run_oracle_check(config, [](const Instance& instance, const Criterion& criterion) {
    return solve(instance, criterion);
  });
}

}  // namespace yankee

#endif  // YANKEE_ORACLE_HPP
