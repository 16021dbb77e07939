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

// Core data model for course allocation: students with credit limits,
// courses with credits and quotas, strict two-sided preferences, optional
// master lists and downward-feasible enrolment rules.

#ifndef COURSEALLOC_MODEL_H_
#define COURSEALLOC_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coursealloc {

using Credits = std::int64_t;

// Dense index strongly typed by side. Indices are contiguous from 0 within an
// instance; the human-readable label lives on the Student / Course record.
template <typename Tag>
struct Index {
  std::int32_t value = -1;

  constexpr Index() = default;
  constexpr explicit Index(std::int32_t v) : value(v) {}
  constexpr auto operator<=>(const Index&) const = default;
  constexpr std::size_t idx() const { return static_cast<std::size_t>(value); }
};

using StudentId = Index<struct StudentTag>;
using CourseId = Index<struct CourseTag>;

struct Student {
  std::string label;
  Credits credit_limit = 0;
  std::vector<CourseId> prefs;  // most preferred first

  bool operator==(const Student&) const = default;
};

struct Course {
  std::string label;
  Credits credits = 1;
  std::int32_t upper_quota = 1;
  std::int32_t lower_quota = 0;
  std::vector<StudentId> prefs;  // most preferred first

  bool operator==(const Course&) const = default;
};

// A downward-feasible enrolment rule. Both kinds stay satisfied when a course
// is removed from a satisfying set.
struct FeasibilityRule {
  enum class Kind { kExcludedCombination, kAtMostKOfGroup };

  Kind kind = Kind::kExcludedCombination;
  std::int32_t k = 0;  // only meaningful for kAtMostKOfGroup
  std::vector<CourseId> courses;
  std::optional<StudentId> owner;  // nullopt: applies to every student

  static FeasibilityRule Exclude(std::vector<CourseId> courses,
                                 std::optional<StudentId> owner = {});
  static FeasibilityRule AtMost(std::int32_t k, std::vector<CourseId> courses,
                                std::optional<StudentId> owner = {});

  bool AppliesTo(StudentId s) const { return !owner || *owner == s; }
  // True if `set` (no duplicates) satisfies this rule.
  bool Allows(std::span<const CourseId> set) const;

  bool operator==(const FeasibilityRule&) const = default;
};

struct Instance {
  std::vector<Student> students;
  std::vector<Course> courses;
  std::optional<std::vector<StudentId>> master_list_students;
  std::optional<std::vector<CourseId>> master_list_courses;
  std::vector<FeasibilityRule> rules;

  std::size_t num_students() const { return students.size(); }
  std::size_t num_courses() const { return courses.size(); }
  const Student& student(StudentId s) const { return students.at(s.idx()); }
  const Course& course(CourseId c) const { return courses.at(c.idx()); }

  std::optional<StudentId> FindStudent(std::string_view label) const;
  std::optional<CourseId> FindCourse(std::string_view label) const;
  // Throws InputError for unknown labels.
  StudentId StudentByLabel(std::string_view label) const;
  CourseId CourseByLabel(std::string_view label) const;

  Credits TotalCredits(std::span<const CourseId> cs) const;
  bool HasRules() const { return !rules.empty(); }

  bool operator==(const Instance&) const = default;
};

// Invalid arguments, unknown ids, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration / search budget or DP size limit was exceeded.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Pair = std::pair<StudentId, CourseId>;

// A set of student-course pairs kept as a sorted, duplicate-free list so that
// equality is set equality.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Pair> pairs);

  static Matching FromLabels(
      const Instance& inst,
      std::span<const std::pair<std::string, std::string>> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  bool Contains(StudentId s, CourseId c) const;
  void Insert(StudentId s, CourseId c);
  void Erase(StudentId s, CourseId c);

  // C_M(s), in increasing course index.
  std::vector<CourseId> CoursesOf(StudentId s) const;
  // S_M(c), in increasing student index.
  std::vector<StudentId> StudentsOf(CourseId c) const;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Pair> pairs_;
};

// Per-side views of a matching, built once for repeated queries.
struct MatchingView {
  std::vector<std::vector<CourseId>> courses_of;   // by student
  std::vector<std::vector<StudentId>> students_of;  // by course
  std::vector<Credits> used;                        // O(C_M(s)) by student

  MatchingView(const Instance& inst, const Matching& m);
};

// Rank lookups in both directions; -1 marks "not listed".
class PreferenceIndex {
 public:
  explicit PreferenceIndex(const Instance& inst);

  int StudentRank(StudentId s, CourseId c) const {
    return student_rank_[s.idx() * num_courses_ + c.idx()];
  }
  int CourseRank(CourseId c, StudentId s) const {
    return course_rank_[c.idx() * num_students_ + s.idx()];
  }
  // Listed on both sides.
  bool Acceptable(StudentId s, CourseId c) const {
    return StudentRank(s, c) >= 0 && CourseRank(c, s) >= 0;
  }

 private:
  std::size_t num_students_;
  std::size_t num_courses_;
  std::vector<int> student_rank_;
  std::vector<int> course_rank_;
};

enum class ViolationKind {
  kInvalidLabel,
  kDuplicateLabel,
  kNegativeCreditLimit,
  kNonPositiveCredits,
  kNegativeQuota,
  kLowerAboveUpper,
  kUnknownReference,
  kDuplicatePreference,
  kOneSidedAcceptability,
  kMasterListIncomplete,
  kMasterListDisagreement,
  kInvalidRule,
  // Matching-level.
  kUnacceptablePair,
  kCreditLimitExceeded,
  kUpperQuotaExceeded,
  kRuleViolated,
};

const char* ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Structural problems with the instance; empty means valid.
std::vector<Violation> ValidateInstance(const Instance& inst);

// Whether `cs` satisfies every rule owned by `s` or by all students. Credit
// limits are not considered. Throws InputError on unknown ids.
bool IsFeasibleSet(const Instance& inst, StudentId s,
                   std::span<const CourseId> cs);

// Acceptability, credit limits, upper quotas and rules. Lower quotas are not
// checked here.
std::vector<Violation> CheckMatching(const Instance& inst, const Matching& m);

struct SizeReport {
  Credits size = 0;
  bool course_complete = false;   // every course at its upper quota
  bool student_complete = false;  // every student at her credit limit
};

SizeReport MatchingSize(const Instance& inst, const Matching& m);

// Courses whose enrolment is below their lower quota.
std::vector<CourseId> LowerQuotaDeficits(const Instance& inst,
                                         const Matching& m);

// The sub-instance keeping only courses with keep[c] set. Closed courses are
// removed from every preference list, master list and rule.
struct RestrictedInstance {
  Instance instance;
  std::vector<CourseId> original;  // new course index -> original id
  std::vector<std::optional<CourseId>> mapped;  // original id -> new id
};

RestrictedInstance RestrictCourses(const Instance& inst,
                                   const std::vector<bool>& keep);

std::string Describe(const Instance& inst, const Matching& m);

}  // namespace coursealloc

#endif  // COURSEALLOC_MODEL_H_
