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

#include "coursealloc/model.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace coursealloc {
namespace {

bool ValidLabel(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

template <typename Id>
bool InRange(Id id, std::size_t n) {
  return id.value >= 0 && id.idx() < n;
}

std::string StudentName(const Instance& inst, StudentId s) {
  if (InRange(s, inst.num_students())) return inst.student(s).label;
  return "#" + std::to_string(s.value);
}

std::string CourseName(const Instance& inst, CourseId c) {
  if (InRange(c, inst.num_courses())) return inst.course(c).label;
  return "#" + std::to_string(c.value);
}

void Add(std::vector<Violation>& out, ViolationKind kind, std::string msg) {
  out.push_back(Violation{kind, std::move(msg)});
}

template <typename Record>
void CheckLabels(const std::vector<Record>& records, const char* side,
                 std::vector<Violation>& out) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string& label = records[i].label;
    if (!ValidLabel(label)) {
      Add(out, ViolationKind::kInvalidLabel,
          std::string(side) + " label '" + label + "' is not [A-Za-z0-9_]+");
    }
    auto [it, inserted] = seen.emplace(label, i);
    if (!inserted) {
      Add(out, ViolationKind::kDuplicateLabel,
          std::string(side) + " label '" + label + "' is used twice");
    }
  }
}

void CheckRules(const Instance& inst, std::vector<Violation>& out) {
  for (std::size_t r = 0; r < inst.rules.size(); ++r) {
    const FeasibilityRule& rule = inst.rules[r];
    const std::string where = "rule #" + std::to_string(r + 1);
    if (rule.owner && !InRange(*rule.owner, inst.num_students())) {
      Add(out, ViolationKind::kUnknownReference,
          where + " is scoped to an unknown student");
    }
    std::vector<CourseId> sorted = rule.courses;
    for (CourseId c : sorted) {
      if (!InRange(c, inst.num_courses())) {
        Add(out, ViolationKind::kUnknownReference,
            where + " references an unknown course");
      }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      Add(out, ViolationKind::kInvalidRule, where + " lists a course twice");
    }
    if (rule.kind == FeasibilityRule::Kind::kExcludedCombination) {
      if (rule.courses.size() < 2) {
        Add(out, ViolationKind::kInvalidRule,
            where + " excludes fewer than two courses");
      }
    } else {
      if (rule.k < 0) {
        Add(out, ViolationKind::kInvalidRule, where + " has negative k");
      }
      if (rule.courses.empty()) {
        Add(out, ViolationKind::kInvalidRule, where + " has an empty group");
      }
    }
  }
}

}  // namespace

FeasibilityRule FeasibilityRule::Exclude(std::vector<CourseId> courses,
                                         std::optional<StudentId> owner) {
  return FeasibilityRule{Kind::kExcludedCombination, 0, std::move(courses),
                         owner};
}

FeasibilityRule FeasibilityRule::AtMost(std::int32_t k,
                                        std::vector<CourseId> courses,
                                        std::optional<StudentId> owner) {
  return FeasibilityRule{Kind::kAtMostKOfGroup, k, std::move(courses), owner};
}

bool FeasibilityRule::Allows(std::span<const CourseId> set) const {
  std::int64_t hits = 0;
  for (CourseId c : courses) {
    if (std::find(set.begin(), set.end(), c) != set.end()) ++hits;
  }
  if (kind == Kind::kExcludedCombination) {
    return hits < static_cast<std::int64_t>(courses.size());
  }
  return hits <= k;
}

std::optional<StudentId> Instance::FindStudent(std::string_view label) const {
  for (std::size_t i = 0; i < students.size(); ++i) {
    if (students[i].label == label) return StudentId(static_cast<int>(i));
  }
  return std::nullopt;
}

std::optional<CourseId> Instance::FindCourse(std::string_view label) const {
  for (std::size_t i = 0; i < courses.size(); ++i) {
    if (courses[i].label == label) return CourseId(static_cast<int>(i));
  }
  return std::nullopt;
}

StudentId Instance::StudentByLabel(std::string_view label) const {
  if (auto s = FindStudent(label)) return *s;
  throw InputError("unknown student '" + std::string(label) + "'");
}

CourseId Instance::CourseByLabel(std::string_view label) const {
  if (auto c = FindCourse(label)) return *c;
  throw InputError("unknown course '" + std::string(label) + "'");
}

Credits Instance::TotalCredits(std::span<const CourseId> cs) const {
  Credits total = 0;
  for (CourseId c : cs) total += course(c).credits;
  return total;
}

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Matching Matching::FromLabels(
    const Instance& inst,
    std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<Pair> out;
  out.reserve(pairs.size());
  for (const auto& [s, c] : pairs) {
    out.emplace_back(inst.StudentByLabel(s), inst.CourseByLabel(c));
  }
  return Matching(std::move(out));
}

bool Matching::Contains(StudentId s, CourseId c) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{s, c});
}

void Matching::Insert(StudentId s, CourseId c) {
  const Pair p{s, c};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

void Matching::Erase(StudentId s, CourseId c) {
  const Pair p{s, c};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it != pairs_.end() && *it == p) pairs_.erase(it);
}

std::vector<CourseId> Matching::CoursesOf(StudentId s) const {
  std::vector<CourseId> out;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                             Pair{s, CourseId(-1)});
  for (; it != pairs_.end() && it->first == s; ++it) out.push_back(it->second);
  return out;
}

std::vector<StudentId> Matching::StudentsOf(CourseId c) const {
  std::vector<StudentId> out;
  for (const auto& [s, cc] : pairs_) {
    if (cc == c) out.push_back(s);
  }
  return out;
}

MatchingView::MatchingView(const Instance& inst, const Matching& m)
    : courses_of(inst.num_students()),
      students_of(inst.num_courses()),
      used(inst.num_students(), 0) {
  for (const auto& [s, c] : m.pairs()) {
    if (!InRange(s, inst.num_students()) || !InRange(c, inst.num_courses())) {
      throw InputError("matching references an unknown student or course");
    }
    courses_of[s.idx()].push_back(c);
    students_of[c.idx()].push_back(s);
    used[s.idx()] += inst.course(c).credits;
  }
}

PreferenceIndex::PreferenceIndex(const Instance& inst)
    : num_students_(inst.num_students()),
      num_courses_(inst.num_courses()),
      student_rank_(num_students_ * num_courses_, -1),
      course_rank_(num_students_ * num_courses_, -1) {
  for (std::size_t s = 0; s < num_students_; ++s) {
    const auto& prefs = inst.students[s].prefs;
    for (std::size_t r = 0; r < prefs.size(); ++r) {
      if (!InRange(prefs[r], num_courses_)) continue;
      int& slot = student_rank_[s * num_courses_ + prefs[r].idx()];
      if (slot < 0) slot = static_cast<int>(r);
    }
  }
  for (std::size_t c = 0; c < num_courses_; ++c) {
    const auto& prefs = inst.courses[c].prefs;
    for (std::size_t r = 0; r < prefs.size(); ++r) {
      if (!InRange(prefs[r], num_students_)) continue;
      int& slot = course_rank_[c * num_students_ + prefs[r].idx()];
      if (slot < 0) slot = static_cast<int>(r);
    }
  }
}

const char* ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInvalidLabel:
      return "invalid-label";
    case ViolationKind::kDuplicateLabel:
      return "duplicate-label";
    case ViolationKind::kNegativeCreditLimit:
      return "negative-credit-limit";
    case ViolationKind::kNonPositiveCredits:
      return "non-positive-credits";
    case ViolationKind::kNegativeQuota:
      return "negative-quota";
    case ViolationKind::kLowerAboveUpper:
      return "lower-above-upper";
    case ViolationKind::kUnknownReference:
      return "unknown-reference";
    case ViolationKind::kDuplicatePreference:
      return "duplicate-preference";
    case ViolationKind::kOneSidedAcceptability:
      return "one-sided-acceptability";
    case ViolationKind::kMasterListIncomplete:
      return "master-list-incomplete";
    case ViolationKind::kMasterListDisagreement:
      return "master-list-disagreement";
    case ViolationKind::kInvalidRule:
      return "invalid-rule";
    case ViolationKind::kUnacceptablePair:
      return "unacceptable-pair";
    case ViolationKind::kCreditLimitExceeded:
      return "credit-limit-exceeded";
    case ViolationKind::kUpperQuotaExceeded:
      return "upper-quota-exceeded";
    case ViolationKind::kRuleViolated:
      return "rule-violated";
  }
  return "unknown";
}

std::vector<Violation> ValidateInstance(const Instance& inst) {
  std::vector<Violation> out;
  const std::size_t n = inst.num_students();
  const std::size_t m = inst.num_courses();
  CheckLabels(inst.students, "student", out);
  CheckLabels(inst.courses, "course", out);

  for (const Student& s : inst.students) {
    if (s.credit_limit < 0) {
      Add(out, ViolationKind::kNegativeCreditLimit,
          "student " + s.label + " has a negative credit limit");
    }
    std::vector<CourseId> sorted = s.prefs;
    for (CourseId c : s.prefs) {
      if (!InRange(c, m)) {
        Add(out, ViolationKind::kUnknownReference,
            "student " + s.label + " lists an unknown course");
      }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      Add(out, ViolationKind::kDuplicatePreference,
          "student " + s.label + " lists a course twice");
    }
  }
  for (const Course& c : inst.courses) {
    if (c.credits < 1) {
      Add(out, ViolationKind::kNonPositiveCredits,
          "course " + c.label + " must carry at least one credit");
    }
    if (c.upper_quota < 0 || c.lower_quota < 0) {
      Add(out, ViolationKind::kNegativeQuota,
          "course " + c.label + " has a negative quota");
    }
    if (c.lower_quota > c.upper_quota) {
      Add(out, ViolationKind::kLowerAboveUpper,
          "course " + c.label + " has lower quota above upper quota");
    }
    std::vector<StudentId> sorted = c.prefs;
    for (StudentId s : c.prefs) {
      if (!InRange(s, n)) {
        Add(out, ViolationKind::kUnknownReference,
            "course " + c.label + " lists an unknown student");
      }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      Add(out, ViolationKind::kDuplicatePreference,
          "course " + c.label + " lists a student twice");
    }
  }

  const PreferenceIndex ranks(inst);
  for (std::size_t si = 0; si < n; ++si) {
    const StudentId s(static_cast<int>(si));
    for (std::size_t ci = 0; ci < m; ++ci) {
      const CourseId c(static_cast<int>(ci));
      const bool by_student = ranks.StudentRank(s, c) >= 0;
      const bool by_course = ranks.CourseRank(c, s) >= 0;
      if (by_student != by_course) {
        Add(out, ViolationKind::kOneSidedAcceptability,
            (by_student ? "student " + inst.students[si].label + " lists " +
                              inst.courses[ci].label + " but not vice versa"
                        : "course " + inst.courses[ci].label + " lists " +
                              inst.students[si].label +
                              " but not vice versa"));
      }
    }
  }

  if (inst.master_list_students) {
    const auto& ml = *inst.master_list_students;
    std::vector<int> pos(n, -1);
    bool well_formed = true;
    for (std::size_t i = 0; i < ml.size(); ++i) {
      if (!InRange(ml[i], n)) {
        Add(out, ViolationKind::kUnknownReference,
            "student master list names an unknown student");
        well_formed = false;
        continue;
      }
      if (pos[ml[i].idx()] >= 0) {
        Add(out, ViolationKind::kDuplicatePreference,
            "student master list names " + inst.student(ml[i]).label +
                " twice");
        well_formed = false;
        continue;
      }
      pos[ml[i].idx()] = static_cast<int>(i);
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (pos[s] < 0) {
        Add(out, ViolationKind::kMasterListIncomplete,
            "student master list omits " + inst.students[s].label);
      }
    }
    if (well_formed) {
      for (const Course& c : inst.courses) {
        for (std::size_t r = 1; r < c.prefs.size(); ++r) {
          const StudentId a = c.prefs[r - 1], b = c.prefs[r];
          if (!InRange(a, n) || !InRange(b, n)) continue;
          if (pos[a.idx()] >= 0 && pos[b.idx()] >= 0 &&
              pos[a.idx()] > pos[b.idx()]) {
            Add(out, ViolationKind::kMasterListDisagreement,
                "course " + c.label + " ranks " + inst.student(a).label +
                    " above " + inst.student(b).label +
                    " against the student master list");
            break;
          }
        }
      }
    }
  }

  if (inst.master_list_courses) {
    const auto& ml = *inst.master_list_courses;
    std::vector<int> pos(m, -1);
    bool well_formed = true;
    for (std::size_t i = 0; i < ml.size(); ++i) {
      if (!InRange(ml[i], m)) {
        Add(out, ViolationKind::kUnknownReference,
            "course master list names an unknown course");
        well_formed = false;
        continue;
      }
      if (pos[ml[i].idx()] >= 0) {
        Add(out, ViolationKind::kDuplicatePreference,
            "course master list names " + inst.course(ml[i]).label + " twice");
        well_formed = false;
        continue;
      }
      pos[ml[i].idx()] = static_cast<int>(i);
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (pos[c] < 0) {
        Add(out, ViolationKind::kMasterListIncomplete,
            "course master list omits " + inst.courses[c].label);
      }
    }
    if (well_formed) {
      for (const Student& s : inst.students) {
        for (std::size_t r = 1; r < s.prefs.size(); ++r) {
          const CourseId a = s.prefs[r - 1], b = s.prefs[r];
          if (!InRange(a, m) || !InRange(b, m)) continue;
          if (pos[a.idx()] >= 0 && pos[b.idx()] >= 0 &&
              pos[a.idx()] > pos[b.idx()]) {
            Add(out, ViolationKind::kMasterListDisagreement,
                "student " + s.label + " ranks " + inst.course(a).label +
                    " above " + inst.course(b).label +
                    " against the course master list");
            break;
          }
        }
      }
    }
  }

  CheckRules(inst, out);
  return out;
}

bool IsFeasibleSet(const Instance& inst, StudentId s,
                   std::span<const CourseId> cs) {
  if (!InRange(s, inst.num_students())) {
    throw InputError("unknown student id " + std::to_string(s.value));
  }
  for (CourseId c : cs) {
    if (!InRange(c, inst.num_courses())) {
      throw InputError("unknown course id " + std::to_string(c.value));
    }
  }
  for (const FeasibilityRule& rule : inst.rules) {
    if (rule.AppliesTo(s) && !rule.Allows(cs)) return false;
  }
  return true;
}

std::vector<Violation> CheckMatching(const Instance& inst, const Matching& m) {
  std::vector<Violation> out;
  const std::size_t n = inst.num_students();
  const std::size_t nc = inst.num_courses();
  for (const auto& [s, c] : m.pairs()) {
    if (!InRange(s, n) || !InRange(c, nc)) {
      Add(out, ViolationKind::kUnknownReference,
          "pair (" + StudentName(inst, s) + "," + CourseName(inst, c) +
              ") references an unknown id");
    }
  }
  if (!out.empty()) return out;

  const PreferenceIndex ranks(inst);
  for (const auto& [s, c] : m.pairs()) {
    if (!ranks.Acceptable(s, c)) {
      Add(out, ViolationKind::kUnacceptablePair,
          "pair (" + StudentName(inst, s) + "," + CourseName(inst, c) +
              ") is not mutually acceptable");
    }
  }
  const MatchingView view(inst, m);
  for (std::size_t si = 0; si < n; ++si) {
    const Student& st = inst.students[si];
    if (view.used[si] > st.credit_limit) {
      Add(out, ViolationKind::kCreditLimitExceeded,
          "student " + st.label + " takes " + std::to_string(view.used[si]) +
              " credits, limit " + std::to_string(st.credit_limit));
    }
    if (!IsFeasibleSet(inst, StudentId(static_cast<int>(si)),
                       view.courses_of[si])) {
      Add(out, ViolationKind::kRuleViolated,
          "student " + st.label + " holds an infeasible set of courses");
    }
  }
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const Course& co = inst.courses[ci];
    const auto enrolled = static_cast<std::int64_t>(view.students_of[ci].size());
    if (enrolled > co.upper_quota) {
      Add(out, ViolationKind::kUpperQuotaExceeded,
          "course " + co.label + " enrols " + std::to_string(enrolled) +
              " students, upper quota " + std::to_string(co.upper_quota));
    }
  }
  return out;
}

SizeReport MatchingSize(const Instance& inst, const Matching& m) {
  const MatchingView view(inst, m);
  SizeReport report;
  report.course_complete = true;
  report.student_complete = true;
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    const auto enrolled = static_cast<std::int64_t>(view.students_of[c].size());
    report.size += inst.courses[c].credits * enrolled;
    if (enrolled != inst.courses[c].upper_quota) report.course_complete = false;
  }
  for (std::size_t s = 0; s < inst.num_students(); ++s) {
    if (view.used[s] != inst.students[s].credit_limit) {
      report.student_complete = false;
    }
  }
  return report;
}

std::vector<CourseId> LowerQuotaDeficits(const Instance& inst,
                                         const Matching& m) {
  const MatchingView view(inst, m);
  std::vector<CourseId> out;
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    if (static_cast<std::int64_t>(view.students_of[c].size()) <
        inst.courses[c].lower_quota) {
      out.push_back(CourseId(static_cast<int>(c)));
    }
  }
  return out;
}

RestrictedInstance RestrictCourses(const Instance& inst,
                                   const std::vector<bool>& keep) {
  if (keep.size() != inst.num_courses()) {
    throw InputError("keep mask size does not match the number of courses");
  }
  RestrictedInstance out;
  out.mapped.assign(inst.num_courses(), std::nullopt);
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    if (!keep[c]) continue;
    out.mapped[c] = CourseId(static_cast<int>(out.original.size()));
    out.original.push_back(CourseId(static_cast<int>(c)));
    out.instance.courses.push_back(inst.courses[c]);
  }
  auto remap = [&](const std::vector<CourseId>& cs) {
    std::vector<CourseId> r;
    for (CourseId c : cs) {
      if (auto mc = out.mapped[c.idx()]) r.push_back(*mc);
    }
    return r;
  };
  out.instance.students = inst.students;
  for (Student& s : out.instance.students) s.prefs = remap(s.prefs);
  out.instance.master_list_students = inst.master_list_students;
  if (inst.master_list_courses) {
    out.instance.master_list_courses = remap(*inst.master_list_courses);
  }
  for (const FeasibilityRule& rule : inst.rules) {
    std::vector<CourseId> cs = remap(rule.courses);
    if (rule.kind == FeasibilityRule::Kind::kExcludedCombination) {
      // A combination containing a closed course can never be completed.
      if (cs.size() != rule.courses.size()) continue;
    } else if (cs.empty()) {
      continue;
    }
    FeasibilityRule r = rule;
    r.courses = std::move(cs);
    out.instance.rules.push_back(std::move(r));
  }
  return out;
}

std::string Describe(const Instance& inst, const Matching& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, c] : m.pairs()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << StudentName(inst, s) << ',' << CourseName(inst, c) << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace coursealloc
