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

// yankee: solve, audit, generate and oracle-check bivalued allocation
// instances.
//
// Exit codes: 0 success, 1 internal invariant failure or oracle mismatch,
// 2 input validation error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yankee/io.hpp"
#include "yankee/yankee.hpp"

namespace {

using yankee::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw yankee::ValidationError("cannot write '" + path + "'");
  out << text;
}

struct SolveArgs {
  std::string instance;
  std::string criterion = "mnw";
  std::optional<double> p;
  std::string trace;
  std::uint64_t seed = 0;
  std::string dot;
  std::string output;
  bool check = false;
};

int run_solve(const SolveArgs& a) {
  const auto instance = yankee::io::load_instance(a.instance);
  const auto criterion = yankee::io::parse_criterion(
      a.criterion, a.p ? std::optional<long double>(*a.p) : std::nullopt);
  yankee::SolveOptions options;
  options.check_invariants = a.check;
  options.record_trace = !a.trace.empty();
  const auto result = yankee::solve(instance, criterion, options);
  json out = yankee::io::solve_result_to_json(instance, criterion, result);
  out["seed"] = a.seed;
  write_text(a.output, out.dump(2) + "\n");
  if (!a.trace.empty()) write_text(a.trace, yankee::io::trace_to_jsonl(instance, result.trace));
  if (!a.dot.empty()) {
    const auto graph = yankee::build_exchange_graph(instance, result.decomposition.clean);
    write_text(a.dot, graph.to_dot(instance));
  }
  return kExitOk;
}

struct AuditArgs {
  std::string instance;
  std::string allocation;
  bool mms = false;
  std::vector<double> pmeans;
  std::string hint;
  bool table = false;
  std::string output;
};

int run_audit(const AuditArgs& a) {
  const auto instance = yankee::io::load_instance(a.instance);
  const auto x = yankee::io::load_allocation(instance, a.allocation);
  yankee::AuditOptions options;
  options.mms = a.mms;
  for (double p : a.pmeans) options.pmeans.push_back(p);
  if (a.hint == "mnw") {
    options.criterion_hint = yankee::CriterionKind::kMnw;
  } else if (a.hint == "leximin") {
    options.criterion_hint = yankee::CriterionKind::kLeximin;
  } else if (!a.hint.empty()) {
    throw yankee::ValidationError("--criterion-hint must be mnw or leximin");
  }
  const auto report = yankee::audit(instance, x, options);
  if (a.table) {
    write_text(a.output, yankee::io::audit_table(instance, report));
  } else {
    write_text(a.output, yankee::io::audit_to_json(instance, report).dump(2) + "\n");
  }
  return kExitOk;
}

struct GenArgs {
  std::string family = "marked";
  std::size_t n = 3;
  std::size_t m = 6;
  std::int64_t c = 2;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const auto instance =
      yankee::generate_instance(yankee::parse_family(a.family), a.n, a.m, a.c, a.seed);
  write_text(a.output, yankee::io::instance_to_json(instance).dump(2) + "\n");
  return kExitOk;
}

struct OracleArgs {
  std::vector<std::string> families;
  std::size_t count = 200;
  std::size_t max_n = 3;
  std::size_t max_m = 6;
  std::vector<std::int64_t> cs = {2, 3};
  std::vector<std::string> criteria;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string report_dir;
};

std::vector<yankee::Criterion> parse_criteria_list(const std::vector<std::string>& specs) {
  // mnw, leximin, pmean:<p>
  std::vector<yankee::Criterion> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      out.push_back(yankee::io::parse_criterion(s, std::nullopt));
      continue;
    }
    const std::string name = s.substr(0, colon);
    long double p = 0;
    try {
      p = std::stold(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw yankee::ValidationError("bad criterion '" + s + "'");
    }
    out.push_back(yankee::io::parse_criterion(name, p));
  }
  return out;
}

int run_oracle_check(const OracleArgs& a) {
  yankee::OracleCheckConfig config;
  if (!a.families.empty()) {
    config.families.clear();
    for (const auto& f : a.families) config.families.push_back(yankee::parse_family(f));
  }
  if (a.max_n == 0 || a.max_m == 0) throw yankee::ValidationError("--max-n and --max-m must be >= 1");
  for (auto c : a.cs) {
    if (c < 2) throw yankee::ValidationError(std::string("--c: ") + yankee::kHardnessNote);
  }
  config.count = a.count;
  config.max_n = a.max_n;
  config.max_m = a.max_m;
  config.cs = a.cs;
  if (!a.criteria.empty()) config.criteria = parse_criteria_list(a.criteria);
  config.seed = a.seed;
  config.jobs = a.jobs;

  const auto summary = yankee::run_oracle_check(config);
  std::cout << "oracle-check: " << summary.instances << " instances, " << summary.checks
            << " checks, " << summary.mismatches.size() << " mismatches\n";
  for (std::size_t k = 0; k < summary.mismatches.size(); ++k) {
    const auto& mm = summary.mismatches[k];
    json record = {{"label", mm.label},
                   {"criterion", mm.criterion.name()},
                   {"solver_sorted", mm.solver_sorted},
                   {"oracle_sorted", mm.oracle_sorted}};
    if (!mm.error.empty()) record["error"] = mm.error;
    std::cout << "MISMATCH " << record.dump() << "\n";
    if (!a.report_dir.empty()) {
      std::filesystem::create_directories(a.report_dir);
      const auto base = a.report_dir + "/mismatch_" + std::to_string(k);
      write_text(base + "_instance.json",
                 yankee::io::instance_to_json(mm.instance).dump(2) + "\n");
      write_text(base + ".json", record.dump(2) + "\n");
    }
  }
  std::cout << (summary.passed() ? "PASS" : "FAIL") << "\n";
  return summary.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivalued Yankee Swap fair allocation solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute an allocation");
  solve->add_option("instance", solve_args.instance, "Instance JSON file")->required();
  solve->add_option("--criterion", solve_args.criterion, "mnw, leximin or pmean")
      ->check(CLI::IsMember({"mnw", "leximin", "pmean"}));
  solve->add_option("--p", solve_args.p, "Exponent for pmean (p < 1, p != 0)");
  solve->add_option("--trace", solve_args.trace, "Write the iteration trace as JSON lines");
  solve->add_option("--seed", solve_args.seed, "Recorded in the output; solving is deterministic");
  solve->add_option("--dot", solve_args.dot, "Write the final exchange graph in DOT format");
  solve->add_option("-o,--output", solve_args.output, "Output file (default stdout)");
  solve->add_flag("--check-invariants", solve_args.check, "Re-verify loop invariants every iteration");

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "Audit an allocation");
  audit->add_option("instance", audit_args.instance, "Instance JSON file")->required();
  audit->add_option("allocation", audit_args.allocation, "Allocation JSON file")->required();
  audit->add_flag("--mms", audit_args.mms, "Compute exact maximin shares");
  audit->add_option("--p", audit_args.pmeans, "p-mean welfare exponents to report");
  audit->add_option("--criterion-hint", audit_args.hint, "mnw or leximin: check the MMS guarantee");
  audit->add_flag("--table", audit_args.table, "Human-readable table instead of JSON");
  audit->add_option("-o,--output", audit_args.output, "Output file (default stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", gen_args.family, "marked, uniform, partition or transversal");
  gen->add_option("--n", gen_args.n, "Agents");
  gen->add_option("--m", gen_args.m, "Goods");
  gen->add_option("--c", gen_args.c, "High value (integer >= 2)");
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle-check", "Compare the solver with brute force");
  oracle->add_option("--family", oracle_args.families, "Families (default all)");
  oracle->add_option("--count", oracle_args.count, "Instances per family");
  oracle->add_option("--max-n", oracle_args.max_n, "Largest agent count");
  oracle->add_option("--max-m", oracle_args.max_m, "Largest good count");
  oracle->add_option("--c", oracle_args.cs, "High values to draw from");
  oracle->add_option("--criteria", oracle_args.criteria, "mnw, leximin, pmean:<p> (default all)")
      ->delimiter(',');
  oracle->add_option("--seed", oracle_args.seed, "Campaign seed");
  oracle->add_option("--jobs", oracle_args.jobs, "Worker threads");
  oracle->add_option("--report-dir", oracle_args.report_dir, "Write mismatching instances here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*audit) return run_audit(audit_args);
    if (*gen) return run_gen(gen_args);
    if (*oracle) return run_oracle_check(oracle_args);
  } catch (const yankee::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const yankee::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const yankee::InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
