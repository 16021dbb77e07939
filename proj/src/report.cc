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

#include "coursealloc/report.h"

#include <algorithm>
#include <sstream>

#include "coursealloc/instance_io.h"

namespace coursealloc {
namespace {

using nlohmann::json;

std::string Labels(const Instance& inst, const std::vector<CourseId>& cs) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ',';
    out += inst.course(cs[i]).label;
  }
  return out;
}

json LabelArray(const Instance& inst, const std::vector<CourseId>& cs) {
  json out = json::array();
  for (CourseId c : cs) out.push_back(inst.course(c).label);
  return out;
}

json Base(const std::string& command, const std::string& status) {
  return json{{"schema", kReportSchema}, {"command", command},
              {"status", status}};
}

}  // namespace

std::string WitnessSummary(const Instance& inst, const BlockingWitness& w) {
  std::string out = inst.student(w.student).label + " blocks with " +
                    Labels(inst, w.coalition) + " dropping ";
  out += w.drop_set.empty() ? "nothing" : Labels(inst, w.drop_set);
  return out;
}

std::vector<std::string> WitnessConditions(const Instance& inst,
                                           const Matching& m,
                                           const BlockingWitness& w) {
  const PreferenceIndex ranks(inst);
  const std::string& s = inst.student(w.student).label;
  std::vector<std::string> out;

  std::string admit = "(1) ";
  for (std::size_t i = 0; i < w.coalition.size(); ++i) {
    const CourseId c = w.coalition[i];
    const Course& co = inst.course(c);
    const auto roster = m.StudentsOf(c);
    if (i > 0) admit += "; ";
    if (static_cast<std::int64_t>(roster.size()) < co.upper_quota) {
      admit += co.label + " is undersubscribed (" +
               std::to_string(roster.size()) + "/" +
               std::to_string(co.upper_quota) + ")";
    } else {
      const StudentId worst = *std::max_element(
          roster.begin(), roster.end(), [&](StudentId a, StudentId b) {
            return ranks.CourseRank(c, a) < ranks.CourseRank(c, b);
          });
      admit += co.label + " prefers " + s + " to " + inst.student(worst).label;
    }
  }
  out.push_back(admit);

  const auto held = m.CoursesOf(w.student);
  const Credits used = inst.TotalCredits(held);
  const Credits gain = inst.TotalCredits(w.coalition);
  const Credits loss = inst.TotalCredits(w.drop_set);
  std::string pref = "(2) ";
  if (w.drop_set.empty()) {
    pref += "nothing dropped";
  } else if (w.notion == StabilityNotion::kFirstCoalition) {
    pref += s + " prefers " + inst.course(w.coalition.front()).label + " to " +
            inst.course(w.drop_set.front()).label;
  } else {
    pref += s + " prefers " + Labels(inst, w.coalition) + " to " +
            Labels(inst, w.drop_set);
  }
  pref += "; credits " + std::to_string(used) + " - " + std::to_string(loss) +
          " + " + std::to_string(gain) + " = " +
          std::to_string(used - loss + gain) +
          " <= " + std::to_string(inst.student(w.student).credit_limit);
  if (w.notion != StabilityNotion::kPair) {
    pref += "; gains " + std::to_string(gain) + " >= drops " +
            std::to_string(loss);
  }
  out.push_back(pref);
  out.push_back(inst.HasRules() ? "(3) resulting course set satisfies the rules"
                                : "(3) no enrolment rules");
  return out;
}

json MatchingJson(const Instance& inst, const Matching& m) {
  json out = json::array();
  for (const auto& [s, c] : m.pairs()) {
    out.push_back(json::array({inst.student(s).label, inst.course(c).label}));
  }
  return out;
}

json WitnessJson(const Instance& inst, const Matching& m,
                 const BlockingWitness& w) {
  return json{{"student", inst.student(w.student).label},
              {"coalition", LabelArray(inst, w.coalition)},
              {"drop", LabelArray(inst, w.drop_set)},
              {"text", WitnessSummary(inst, w)},
              {"conditions", WitnessConditions(inst, m, w)}};
}

json VerifyReport(const Instance& inst, const Matching& m,
                  StabilityNotion notion, VerifyMode mode,
                  const VerifyResult& result) {
  json out = Base("verify", result.stable() ? "stable" : "unstable");
  out["notion"] = ToString(notion);
  out["mode"] = ToString(mode);
  out["matching"] = MatchingJson(inst, m);
  if (result.witness) out["witness"] = WitnessJson(inst, m, *result.witness);
  return out;
}

std::string VerifyText(const Instance& inst, const Matching& m,
                       StabilityNotion notion, const VerifyResult& result) {
  std::ostringstream out;
  if (result.stable()) {
    out << "stable under " << ToString(notion) << "\n";
    return out.str();
  }
  out << "unstable under " << ToString(notion) << "\n";
  out << WitnessSummary(inst, *result.witness) << "\n";
  for (const auto& line : WitnessConditions(inst, m, *result.witness)) {
    out << "  " << line << "\n";
  }
  return out.str();
}

json SolveReport(const Instance& inst, const Matching& m,
                 const std::string& algorithm) {
  const SizeReport size = MatchingSize(inst, m);
  json out = Base("solve", "ok");
  out["algorithm"] = algorithm;
  out["matching"] = MatchingJson(inst, m);
  out["size"] = size.size;
  out["course_complete"] = size.course_complete;
  out["student_complete"] = size.student_complete;
  return out;
}

std::string SolveText(const Instance& inst, const Matching& m) {
  const SizeReport size = MatchingSize(inst, m);
  std::ostringstream out;
  out << "# size=" << size.size
      << " course-complete=" << (size.course_complete ? "yes" : "no")
      << " student-complete=" << (size.student_complete ? "yes" : "no")
      << "\n";
  out << SerializeMatching(inst, m);
  return out.str();
}

json MaxReport(const Instance& inst, StabilityNotion notion, LqMode lq,
               const std::optional<StableSearchResult>& result) {
  json out = Base("max", result ? "ok" : "none");
  out["notion"] = ToString(notion);
  out["lq"] = ToString(lq);
  if (result) {
    out["matching"] = MatchingJson(inst, result->matching);
    out["size"] = result->size;
    if (lq == LqMode::kClosures) {
      out["open_courses"] = LabelArray(inst, result->open_courses);
    }
  }
  return out;
}

std::string MaxText(const Instance& inst,
                    const std::optional<StableSearchResult>& result) {
  if (!result) return "no stable matching\n";
  std::ostringstream out;
  out << "# size=" << result->size << "\n";
  if (!result->open_courses.empty()) {
    out << "# open=" << Labels(inst, result->open_courses) << "\n";
  }
  out << SerializeMatching(inst, result->matching);
  return out.str();
}

json OracleReport(const Instance& inst, LqMode lq,
                  const EnumerationReport& report) {
  json out = Base("oracle", "ok");
  out["lq"] = ToString(lq);
  out["total_matchings"] = report.total_matchings;
  json notions = json::object();
  for (StabilityNotion n : kAllNotions) {
    const int i = static_cast<int>(n);
    json entry{{"stable_count", report.stable_counts[i]}};
    if (report.max_stable_size[i]) {
      entry["max_size"] = *report.max_stable_size[i];
      entry["best"] = MatchingJson(inst, *report.best[i]);
    } else {
      entry["max_size"] = nullptr;
      entry["best"] = nullptr;
    }
    notions[ToString(n)] = std::move(entry);
  }
  out["notions"] = std::move(notions);
  return out;
}

std::string OracleText(const Instance& inst, const EnumerationReport& report) {
  std::ostringstream out;
  out << "matchings " << report.total_matchings << "\n";
  for (StabilityNotion n : kAllNotions) {
    const int i = static_cast<int>(n);
    out << ToString(n) << ": stable=" << report.stable_counts[i];
    if (report.max_stable_size[i]) {
      out << " max-size=" << *report.max_stable_size[i] << " best="
          << Describe(inst, *report.best[i]);
    } else {
      out << " max-size=none";
    }
    out << "\n";
  }
  return out.str();
}

json InstanceReport(const std::string& command,
                    const std::string& instance_text) {
  json out = Base(command, "ok");
  out["instance"] = instance_text;
  return out;
}

json ErrorReport(const std::string& command, int exit_code,
                 const std::string& message) {
  json out = Base(command, "error");
  out["exit_code"] = exit_code;
  out["message"] = message;
  return out;
}

}  // namespace coursealloc
