// Copyright 2026 The coursealloc Authors
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

#include "coursealloc/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coursealloc/instance_io.h"
#include "coursealloc/model.h"
#include "coursealloc/oracle.h"
#include "coursealloc/reductions.h"
#include "coursealloc/report.h"
#include "coursealloc/solve.h"
#include "coursealloc/verify.h"

namespace coursealloc::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code = kExitOk;
  std::string text;
  json report;
};

std::string ReadSource(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

// "3" or "1:3".
template <typename T>
std::pair<T, T> ParseRange(const std::string& text, const char* what) {
  auto number = [&](std::string_view s) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw InputError(std::string("bad ") + what + " range '" + text + "'");
    }
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const T v = number(text);
    return {v, v};
  }
  return {number(std::string_view(text).substr(0, colon)),
          number(std::string_view(text).substr(colon + 1))};
}

ParsedInstance LoadInstance(const std::string& path, std::istream& in) {
  return ParseInstance(ReadSource(path, in));
}

struct VerifyArgs {
  std::string notion;
  std::string mode = "auto";
  std::uint64_t exhaustive_cap = VerifyOptions{}.exhaustive_cap;
  std::string file;
};

Outcome DoVerify(const VerifyArgs& a, std::istream& in) {
  const auto notion = ParseNotion(a.notion);
  if (!notion) throw InputError("unknown notion '" + a.notion + "'");
  const auto mode = ParseVerifyMode(a.mode);
  if (!mode) throw InputError("unknown mode '" + a.mode + "'");
  const ParsedInstance parsed = LoadInstance(a.file, in);
  if (!parsed.matching) throw InputError("file has no [matching] section");
  const auto problems = CheckMatching(parsed.instance, *parsed.matching);
  if (!problems.empty()) {
    throw InputError("not a matching: " + problems.front().message);
  }
  if (*mode == VerifyMode::kDp && parsed.instance.HasRules()) {
    throw InputError("--mode=dp does not support enrolment rules");
  }
  VerifyOptions opts;
  opts.mode = *mode;
  opts.exhaustive_cap = a.exhaustive_cap;
  const VerifyResult r =
      Verify(parsed.instance, *parsed.matching, *notion, opts);
  return {r.stable() ? kExitOk : kExitUnstable,
          VerifyText(parsed.instance, *parsed.matching, *notion, r),
          VerifyReport(parsed.instance, *parsed.matching, *notion, *mode, r)};
}

Outcome DoSolve(const std::string& alg, const std::string& file,
                std::istream& in) {
  const ParsedInstance parsed = LoadInstance(file, in);
  Matching m;
  if (alg == "pair-size-da") {
    m = SolvePairSizeDa(parsed.instance);
  } else if (alg == "serial-dictatorship") {
    m = SolveMasterList(parsed.instance);
  } else {
    throw InputError("unknown algorithm '" + alg + "'");
  }
  return {kExitOk, SolveText(parsed.instance, m),
          SolveReport(parsed.instance, m, alg)};
}

Outcome DoMax(const std::string& notion_name, const std::string& lq_name,
              std::int64_t node_cap, const std::string& file,
              std::istream& in) {
  const auto notion = ParseNotion(notion_name);
  if (!notion) throw InputError("unknown notion '" + notion_name + "'");
  const auto lq = ParseLqMode(lq_name);
  if (!lq) throw InputError("unknown lower-quota mode '" + lq_name + "'");
  const ParsedInstance parsed = LoadInstance(file, in);
  SearchOptions opts;
  opts.node_cap = node_cap;
  const auto result = MaxStableSearch(parsed.instance, *notion, *lq, opts);
  return {result ? kExitOk : kExitNoStable, MaxText(parsed.instance, result),
          MaxReport(parsed.instance, *notion, *lq, result)};
}

Outcome DoOracle(const std::string& lq_name, std::size_t max_pairs,
                 const std::string& file, std::istream& in) {
  const auto lq = ParseLqMode(lq_name);
  if (!lq) throw InputError("unknown lower-quota mode '" + lq_name + "'");
  const ParsedInstance parsed = LoadInstance(file, in);
  OracleOptions opts;
  opts.max_pairs = max_pairs;
  const EnumerationReport report = MaxStableBrute(parsed.instance, *lq, opts);
  return {kExitOk, OracleText(parsed.instance, report),
          OracleReport(parsed.instance, *lq, report)};
}

struct GenArgs {
  int students = 3;
  int courses = 3;
  std::string credits = "1:2";
  std::string limits = "1:4";
  std::string upper = "1:2";
  std::string lower = "0";
  double density = 0.6;
  bool master_list = false;
  bool master_list_courses = false;
  int rules = 0;
  std::uint64_t seed = 0;
};

Outcome DoGen(const GenArgs& a) {
  RandomParams p;
  p.students = a.students;
  p.courses = a.courses;
  p.credits = ParseRange<Credits>(a.credits, "credits");
  p.limits = ParseRange<Credits>(a.limits, "limits");
  p.upper_quotas = ParseRange<int>(a.upper, "upper");
  p.lower_quotas = ParseRange<int>(a.lower, "lower");
  p.density = a.density;
  p.master_list = a.master_list;
  p.master_list_courses = a.master_list_courses;
  p.rules = a.rules;
  const std::string text = SerializeInstance(GenRandom(p, a.seed));
  return {kExitOk, text, InstanceReport("gen", text)};
}

Outcome DoReduce(const std::string& from, const std::string& file,
                 std::istream& in) {
  const Fixture f = ReduceFromText(from, ReadSource(file, in));
  const std::string text =
      SerializeInstance(f.instance, f.matching ? &*f.matching : nullptr);
  return {kExitOk, text, InstanceReport("reduce", text)};
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"Stable course allocation: verify, solve, search, reduce."};
  app.name("coursealloc");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a machine-readable JSON report");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a matching for stability");
  verify->add_option("--notion", va.notion,
                     "pair | pair-size | coalition | first-coalition")
      ->required();
  verify->add_option("--mode", va.mode, "auto | dp | exhaustive");
  verify->add_option("--exhaustive-cap", va.exhaustive_cap,
                     "Per-student subset cap for the exhaustive verifier");
  verify->add_option("FILE", va.file, "Instance file with a [matching]")
      ->required();

  std::string alg, solve_file;
  auto* solve = app.add_subcommand("solve", "Run an allocation algorithm");
  solve->add_option("--alg", alg, "pair-size-da | serial-dictatorship")
      ->required();
  solve->add_option("FILE", solve_file)->required();

  std::string max_notion, max_lq = "none", max_file;
  std::int64_t node_cap = SearchOptions{}.node_cap;
  auto* max = app.add_subcommand("max", "Find a maximum-size stable matching");
  max->add_option("--notion", max_notion)->required();
  max->add_option("--lq", max_lq, "none | nc | cl");
  max->add_option("--node-cap", node_cap, "Search node budget");
  max->add_option("FILE", max_file)->required();

  std::string oracle_lq = "none", oracle_file;
  std::size_t max_pairs = OracleOptions{}.max_pairs;
  auto* oracle =
      app.add_subcommand("oracle", "Enumerate every matching (tiny inputs)");
  oracle->add_option("--lq", oracle_lq, "none | nc | cl");
  oracle->add_option("--max-pairs", max_pairs, "Acceptable-pair cap");
  oracle->add_option("FILE", oracle_file)->required();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--students", ga.students);
  gen->add_option("--courses", ga.courses);
  gen->add_option("--credits", ga.credits, "Course credits, N or LO:HI");
  gen->add_option("--limits", ga.limits, "Student credit limits, N or LO:HI");
  gen->add_option("--upper", ga.upper, "Upper quotas, N or LO:HI");
  gen->add_option("--lower", ga.lower, "Lower quotas, N or LO:HI");
  gen->add_option("--density", ga.density, "Chance a pair is acceptable");
  gen->add_flag("--master-list", ga.master_list);
  gen->add_flag("--master-list-courses", ga.master_list_courses);
  gen->add_option("--rules", ga.rules, "Number of enrolment rules");
  gen->add_option("--seed", ga.seed)->required();

  std::string from, reduce_file;
  auto* reduce =
      app.add_subcommand("reduce", "Build an instance from a source problem");
  reduce
      ->add_option("--from", from,
                   "subset-sum | hrs | hrs-fc | smti | smti-distinct | min-mm "
                   "| exact-mm | exact-mm-bounded | exact-mm-lq")
      ->required();
  reduce->add_option("SRC", reduce_file)->required();

  for (auto* sub : {verify, solve, max, oracle, gen, reduce}) {
    sub->add_flag("--json", as_json, "Print a machine-readable JSON report");
  }

  std::vector<const char*> argv = {"coursealloc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;  // --help
    err << app.help();
    return kExitUsage;
  }

  std::string command = "coursealloc";
  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  Outcome result;
  try {
    if (verify->parsed()) {
      result = DoVerify(va, in);
    } else if (solve->parsed()) {
      result = DoSolve(alg, solve_file, in);
    } else if (max->parsed()) {
      result = DoMax(max_notion, max_lq, node_cap, max_file, in);
    } else if (oracle->parsed()) {
      result = DoOracle(oracle_lq, max_pairs, oracle_file, in);
    } else if (gen->parsed()) {
      result = DoGen(ga);
    } else {
      result = DoReduce(from, reduce_file, in);
    }
  } catch (const CapabilityError& e) {
    result = {kExitBudget, "", ErrorReport(command, kExitBudget, e.what())};
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const InputError& e) {
    result = {kExitUsage, "", ErrorReport(command, kExitUsage, e.what())};
    err << "error: " << e.what() << "\n";
  }
  if (as_json) {
    out << result.report.dump(2) << "\n";
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace coursealloc::cli
