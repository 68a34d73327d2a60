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

// JSON reading and writing of instances, allocations, traces and reports.
// Requires nlohmann/json.

#ifndef YANKEE_IO_HPP
#define YANKEE_IO_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "yankee/allocation.hpp"
#include "yankee/audit.hpp"
#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/matroid.hpp"
#include "yankee/solver.hpp"
#include "yankee/valuation.hpp"

namespace yankee::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

namespace detail {

inline void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ValidationError(where + ": unknown field '" + key + "'");
  }
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t as_count(const json& j, const std::string& where) {
  const auto v = as_int(j, where);
  if (v < 0) throw ValidationError(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": expected a string");
  return j.get<std::string>();
}

inline const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array");
  return j;
}

inline std::vector<std::string> names(const json& j, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& e : as_array(j, where)) out.push_back(as_string(e, where));
  return out;
}

class GoodIndex {
 public:
  explicit GoodIndex(const std::vector<std::string>& goods) : m_(goods.size()) {
    for (GoodId g = 0; g < goods.size(); ++g) index_[goods[g]] = g;
  }

  GoodId operator()(const json& j, const std::string& where) const {
    const auto name = as_string(j, where);
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError(where + ": unknown good '" + name + "'");
    return it->second;
  }

  GoodSet set(const json& j, const std::string& where) const {
    GoodSet s(m_);
    for (const auto& e : as_array(j, where)) {
      const GoodId g = (*this)(e, where);
      if (s.contains(g)) throw ValidationError(where + ": good listed twice");
      s.insert(g);
    }
    return s;
  }

 private:
  std::size_t m_;
  std::map<std::string, GoodId> index_;
};

inline json good_names(const Instance& instance, const GoodSet& s) {
  json out = json::array();
  s.for_each([&](GoodId g) { out.push_back(instance.good_name(g)); });
  return out;
}

inline MatroidSpec parse_matroid(const json& j, const GoodIndex& goods, std::size_t m,
                                 const std::string& where) {
  const auto type = as_string(field(j, "type", where), where + ".type");
  if (type == "uniform") {
    only_keys(j, {"type", "cap"}, where);
    return UniformMatroid{as_count(field(j, "cap", where), where + ".cap")};
  }
  if (type == "partition") {
    only_keys(j, {"type", "parts", "caps"}, where);
    PartitionMatroid pm;
    for (const auto& part : as_array(field(j, "parts", where), where + ".parts")) {
      pm.parts.push_back(goods.set(part, where + ".parts"));
    }
    for (const auto& cap : as_array(field(j, "caps", where), where + ".caps")) {
      pm.caps.push_back(as_count(cap, where + ".caps"));
    }
    return pm;
  }
  if (type == "marked") {
    only_keys(j, {"type", "goods"}, where);
    return MarkedMatroid{goods.set(field(j, "goods", where), where + ".goods")};
  }
  if (type == "transversal") {
    only_keys(j, {"type", "slots", "adjacency"}, where);
    TransversalMatroid tm;
    tm.slots = as_count(field(j, "slots", where), where + ".slots");
    tm.adjacency.resize(m);
    const auto& adj = field(j, "adjacency", where);
    if (!adj.is_object()) throw ValidationError(where + ".adjacency: expected an object");
    for (const auto& [name, slots] : adj.items()) {
      const GoodId g = goods(json(name), where + ".adjacency");
      for (const auto& s : as_array(slots, where + ".adjacency")) {
        tm.adjacency[g].push_back(as_count(s, where + ".adjacency"));
      }
    }
    return tm;
  }
  if (type == "explicit") {
    only_keys(j, {"type", "ranks"}, where);
    ExplicitMatroid em;
    for (const auto& r : as_array(field(j, "ranks", where), where + ".ranks")) {
      if (r.is_null()) {
        em.ranks.push_back(ExplicitMatroid::kMissing);
      } else {
        const auto v = as_int(r, where + ".ranks");
        if (v < 0) throw ValidationError(where + ".ranks: negative rank");
        em.ranks.push_back(static_cast<int>(v));
      }
    }
    return em;
  }
  throw ValidationError(where + ": unknown matroid type '" + type + "'");
}

inline json matroid_to_json(const Instance& instance, const MatroidSpec& spec) {
  json j;
  j["type"] = matroid_type_name(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) {
          j["cap"] = s.cap;
        } else if constexpr (std::is_same_v<T, PartitionMatroid>) {
          j["parts"] = json::array();
          for (const auto& part : s.parts) j["parts"].push_back(good_names(instance, part));
          j["caps"] = s.caps;
        } else if constexpr (std::is_same_v<T, MarkedMatroid>) {
          j["goods"] = good_names(instance, s.marked);
        } else if constexpr (std::is_same_v<T, TransversalMatroid>) {
          j["slots"] = s.slots;
          j["adjacency"] = json::object();
          for (GoodId g = 0; g < s.adjacency.size(); ++g) {
            if (!s.adjacency[g].empty()) j["adjacency"][instance.good_name(g)] = s.adjacency[g];
          }
        } else {
          j["ranks"] = json::array();
          for (int r : s.ranks) {
            if (r == ExplicitMatroid::kMissing) {
              j["ranks"].push_back(nullptr);
            } else {
              j["ranks"].push_back(r);
            }
          }
        }
      },
      spec);
  return j;
}

}  // namespace detail

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": invalid JSON: " + e.what());
  }
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

// {version: 1, c | (a, b), goods: [names], agents: [{name, matroid}]}.
inline Instance parse_instance(const json& j) {
  detail::only_keys(j, {"version", "c", "a", "b", "goods", "agents"}, "instance");
  if (detail::as_int(detail::field(j, "version", "instance"), "version") != kFormatVersion) {
    throw ValidationError("instance: unsupported version");
  }
  Value c = 0;
  Value scale = 1;
  const bool has_c = j.contains("c");
  const bool has_ab = j.contains("a") || j.contains("b");
  if (has_c == has_ab) throw ValidationError("instance: give either 'c' or both 'a' and 'b'");
  if (has_c) {
    const auto& cj = j["c"];
    if (!cj.is_number()) throw ValidationError("c: expected a number");
    c = integral_high_value(cj.get<long double>());
  } else {
    const Value a = detail::as_int(detail::field(j, "a", "instance"), "a");
    const Value b = detail::as_int(detail::field(j, "b", "instance"), "b");
    c = rescale_pair(a, b);
    scale = a;
  }
  auto goods = detail::names(detail::field(j, "goods", "instance"), "goods");
  const detail::GoodIndex index(goods);
  std::vector<std::string> agents;
  std::vector<Matroid> matroids;
  const auto& aj = detail::as_array(detail::field(j, "agents", "instance"), "agents");
  for (std::size_t k = 0; k < aj.size(); ++k) {
    const std::string where = "agents[" + std::to_string(k) + "]";
    detail::only_keys(aj[k], {"name", "matroid"}, where);
    agents.push_back(detail::as_string(detail::field(aj[k], "name", where), where + ".name"));
    auto spec = detail::parse_matroid(detail::field(aj[k], "matroid", where), index, goods.size(),
                                      where + ".matroid");
    try {
      matroids.emplace_back(goods.size(), std::move(spec));
    } catch (const PreconditionError& e) {
      throw MalformedMatroidError(where + ".matroid: " + e.what());
    }
  }
  return Instance(c, std::move(goods), std::move(agents), std::move(matroids), scale);
}

inline Instance parse_instance_text(const std::string& text) {
  return parse_instance(parse_json_text(text, "instance"));
}

inline Instance load_instance(const std::string& path) { return parse_instance(load_json(path)); }

inline json instance_to_json(const Instance& instance) {
  json j;
  j["version"] = kFormatVersion;
  if (instance.scale() == 1) {
    j["c"] = instance.c();
  } else {
    j["a"] = instance.scale();
    j["b"] = instance.scale() * instance.c();
  }
  j["goods"] = instance.goods();
  j["agents"] = json::array();
  for (AgentId i = 1; i <= instance.n(); ++i) {
    j["agents"].push_back({{"name", instance.agent_name(i)},
                           {"matroid", detail::matroid_to_json(
                                           instance, instance.valuation(i).matroid().spec())}});
  }
  return j;
}

// ---------------------------------------------------------------------------
// Allocations.

inline json bundles_to_json(const Instance& instance, const Allocation& x) {
  json out = json::array();
  for (AgentId i = 1; i <= instance.n(); ++i) out.push_back(detail::good_names(instance, x.bundle(i)));
  return out;
}

inline json allocation_to_json(const Instance& instance, const Allocation& x) {
  json j;
  j["version"] = kFormatVersion;
  j["agents"] = instance.agents();
  j["bundles"] = bundles_to_json(instance, x);
  j["unallocated"] = detail::good_names(instance, x.bundle(0));
  return j;
}

// Reads "bundles" (one list of good names per agent, in agent order). Goods
// not listed stay unallocated. Accepts everything allocation_to_json and
// solve_result_to_json write.
inline Allocation parse_allocation(const Instance& instance, const json& j) {
  detail::only_keys(j,
                    {"version", "criterion", "p", "c", "scale", "agents", "bundles",
                     "unallocated", "clean", "supplementary", "utilities", "sorted_utilities",
                     "iterations", "in_play", "seed"},
                    "allocation");
  if (j.contains("version") && detail::as_int(j["version"], "version") != kFormatVersion) {
    throw ValidationError("allocation: unsupported version");
  }
  if (j.contains("agents") && detail::names(j["agents"], "agents") != instance.agents()) {
    throw ValidationError("allocation: agents do not match the instance");
  }
  const auto& bj = detail::as_array(detail::field(j, "bundles", "allocation"), "bundles");
  if (bj.size() != instance.n()) {
    throw ValidationError("allocation: expected " + std::to_string(instance.n()) + " bundles");
  }
  const detail::GoodIndex index(instance.goods());
  Allocation x(instance.n(), instance.m());
  GoodSet seen(instance.m());
  for (AgentId i = 1; i <= instance.n(); ++i) {
    const GoodSet s = index.set(bj[i - 1], "bundles");
    if (s.intersects(seen)) throw ValidationError("allocation: a good is in two bundles");
    seen |= s;
    s.for_each([&](GoodId g) { x.move(g, i); });
  }
  if (j.contains("unallocated")) {
    const GoodSet pool = index.set(j["unallocated"], "unallocated");
    if (pool.intersects(seen)) throw ValidationError("allocation: an allocated good is listed as unallocated");
  }
  return x;
}

inline Allocation load_allocation(const Instance& instance, const std::string& path) {
  return parse_allocation(instance, load_json(path));
}

inline json real_to_json(long double x) { return static_cast<double>(x); }

inline json solve_result_to_json(const Instance& instance, const Criterion& criterion,
                                 const SolveResult& result) {
  json j = allocation_to_json(instance, result.allocation);
  j["criterion"] = criterion.name();
  if (criterion.kind == CriterionKind::kPMean) j["p"] = real_to_json(criterion.p);
  j["c"] = instance.c();
  j["scale"] = instance.scale();
  j["clean"] = bundles_to_json(instance, result.decomposition.clean);
  j["supplementary"] = json::array();
  for (AgentId i = 1; i <= instance.n(); ++i) {
    j["supplementary"].push_back(detail::good_names(instance, result.decomposition.supplementary[i]));
  }
  j["utilities"] = utility_vector(instance, result.allocation);
  j["sorted_utilities"] = sorted_utility_vector(instance, result.allocation);
  j["iterations"] = result.iterations;
  j["in_play"] = json::array();
  for (AgentId i : result.in_play) j["in_play"].push_back(instance.agent_name(i));
  return j;
}

inline json gain_to_json(const GainValue& g) { return g.to_string(); }

inline json trace_record_to_json(const Instance& instance, const IterationRecord& r) {
  json j;
  j["iteration"] = r.iteration;
  j["agent"] = r.agent == 0 ? json(nullptr) : json(instance.agent_name(r.agent));
  j["action"] = to_string(r.action);
  j["gain_c"] = gain_to_json(r.gain_c);
  j["gain_1"] = gain_to_json(r.gain_1);
  if (r.action == Action::kAugmented) {
    j["path"] = json::array();
    for (GoodId g : r.path) j["path"].push_back(instance.good_name(g));
  }
  if (r.provisional_good) j["provisional_good"] = instance.good_name(*r.provisional_good);
  if (r.replaced_for) {
    j["replaced_for"] = instance.agent_name(*r.replaced_for);
    j["stolen_good"] = instance.good_name(*r.stolen_good);
    j["replacement_good"] = instance.good_name(*r.replacement_good);
  }
  return j;
}

// One compact JSON object per line.
inline std::string trace_to_jsonl(const Instance& instance, const SolveTrace& trace) {
  std::string out;
  for (const auto& r : trace) out += trace_record_to_json(instance, r).dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Audit reports.

inline json envy_to_json(const Instance& instance, const EnvyCheck& e) {
  json j;
  j["satisfied"] = e.satisfied;
  if (e.witness) {
    json w;
    w["envious"] = instance.agent_name(e.witness->envious);
    w["envied"] = instance.agent_name(e.witness->envied);
    if (e.witness->good) w["good"] = instance.good_name(*e.witness->good);
    j["witness"] = w;
  }
  return j;
}

inline json audit_to_json(const Instance& instance, const AuditReport& r) {
  json j;
  j["agents"] = instance.agents();
  j["utilities"] = r.utilities;
  j["scale"] = instance.scale();
  j["nash"] = {{"positive_count", r.nash.positive_count}, {"product", r.nash.product.str()}};
  j["usw"] = r.usw;
  j["pmeans"] = json::array();
  for (const auto& [p, v] : r.pmeans) j["pmeans"].push_back({{"p", real_to_json(p)}, {"value", real_to_json(v)}});
  j["ef1"] = r.ef1.satisfied;
  j["efx"] = r.efx.satisfied;
  j["ef1_check"] = envy_to_json(instance, r.ef1);
  j["efx_check"] = envy_to_json(instance, r.efx);
  if (r.mms) {
    json m;
    m["entries"] = json::array();
    for (const auto& e : r.mms->entries) {
      json ej = {{"agent", instance.agent_name(e.agent)},
                 {"utility", e.utility},
                 {"mms", e.share},
                 {"meets_threshold", e.meets_threshold}};
      ej["ratio"] = e.ratio ? json(*e.ratio) : json(nullptr);
      m["entries"].push_back(ej);
    }
    if (r.mms->threshold) {
      m["threshold"] = {{"num", r.mms->threshold->first}, {"den", r.mms->threshold->second}};
    }
    m["all_meet_threshold"] = r.mms->all_meet_threshold;
    j["mms"] = m;
  }
  return j;
}

inline std::string audit_table(const Instance& instance, const AuditReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "agent" << std::setw(10) << "utility";
  if (r.mms) out << std::setw(8) << "mms" << std::setw(10) << "ratio";
  out << "\n";
  for (AgentId i = 1; i <= instance.n(); ++i) {
    out << std::setw(12) << instance.agent_name(i) << std::setw(10) << r.utilities[i - 1];
    if (r.mms) {
      const auto& e = r.mms->entries[i - 1];
      std::ostringstream ratio;
      if (e.ratio) {
        ratio << std::fixed << std::setprecision(3) << *e.ratio;
      } else {
        ratio << "-";
      }
      out << std::setw(8) << e.share << std::setw(10) << ratio.str();
    }
    out << "\n";
  }
  out << "nash: " << r.nash.positive_count << " positive, product " << r.nash.product << "\n";
  out << "usw: " << r.usw << "\n";
  for (const auto& [p, v] : r.pmeans) out << "pmean(" << static_cast<double>(p) << "): " << static_cast<double>(v) << "\n";
  auto envy = [&](const char* name, const EnvyCheck& e) {
    out << name << ": " << (e.satisfied ? "yes" : "no");
    if (e.witness) {
      out << " (" << instance.agent_name(e.witness->envious) << " envies "
          << instance.agent_name(e.witness->envied);
      if (e.witness->good) out << " after removing " << instance.good_name(*e.witness->good);
      out << ")";
    }
    out << "\n";
  };
  envy("ef1", r.ef1);
  envy("efx", r.efx);
  if (r.mms && r.mms->threshold) {
    out << "mms threshold " << r.mms->threshold->first << "/" << r.mms->threshold->second << ": "
        << (r.mms->all_meet_threshold ? "met" : "VIOLATED") << "\n";
  }
  return out.str();
}

inline Criterion parse_criterion(const std::string& name, std::optional<long double> p) {
  if (name == "mnw") return Criterion::mnw();
  if (name == "leximin") return Criterion::leximin();
  if (name == "pmean") {
    if (!p) throw ValidationError("criterion pmean needs --p");
    return Criterion::pmean(*p);
  }
  throw ValidationError("unknown criterion '" + name + "' (expected mnw, leximin or pmean)");
}

}  // namespace yankee::io

#endif  // YANKEE_IO_HPP
