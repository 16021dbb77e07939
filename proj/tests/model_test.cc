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

#include <doctest.h>

#include "coursealloc/model.h"
#include "test_support.h"

namespace ca = coursealloc;
using namespace ca::testing;

namespace {

bool HasKind(const std::vector<ca::Violation>& v, ca::ViolationKind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("fixtures are valid instances") {
  for (const auto& [name, f] : ca::Fixtures()) {
    CAPTURE(name);
    CHECK(ca::ValidateInstance(f.instance).empty());
    if (f.matching) CHECK(ca::CheckMatching(f.instance, *f.matching).empty());
  }
}

TEST_CASE("validation flags one-sided acceptability") {
  auto inst = Fig("fig1").instance;
  inst.courses[2].prefs.clear();  // c3 no longer lists s1
  CHECK(HasKind(ca::ValidateInstance(inst),
                ca::ViolationKind::kOneSidedAcceptability));
}

TEST_CASE("validation flags bad numbers and labels") {
  auto inst = Fig("fig1").instance;
  inst.courses[0].credits = 0;
  inst.courses[1].lower_quota = 2;
  inst.students[1].label = "bad label";
  const auto v = ca::ValidateInstance(inst);
  CHECK(HasKind(v, ca::ViolationKind::kNonPositiveCredits));
  CHECK(HasKind(v, ca::ViolationKind::kLowerAboveUpper));
  CHECK(HasKind(v, ca::ViolationKind::kInvalidLabel));
}

TEST_CASE("validation checks master lists") {
  auto inst = Fig("ml").instance;
  CHECK(ca::ValidateInstance(inst).empty());
  std::swap(inst.courses[0].prefs[0], inst.courses[0].prefs[1]);
  CHECK(HasKind(ca::ValidateInstance(inst),
                ca::ViolationKind::kMasterListDisagreement));
  inst = Fig("ml").instance;
  inst.master_list_students->pop_back();
  CHECK(HasKind(ca::ValidateInstance(inst),
                ca::ViolationKind::kMasterListIncomplete));
}

TEST_CASE("check_matching reports each kind of infeasibility") {
  const auto inst = Fig("fig1").instance;
  CHECK(HasKind(ca::CheckMatching(inst, M(inst, {{"s2", "c3"}})),
                ca::ViolationKind::kUnacceptablePair));
  CHECK(HasKind(ca::CheckMatching(inst, M(inst, {{"s2", "c1"}, {"s2", "c2"}})),
                ca::ViolationKind::kCreditLimitExceeded));
  CHECK(HasKind(ca::CheckMatching(inst, M(inst, {{"s1", "c2"}, {"s2", "c2"}})),
                ca::ViolationKind::kUpperQuotaExceeded));
  auto ruled = inst;
  ruled.rules.push_back(ca::FeasibilityRule::Exclude(Cs(inst, {"c1", "c2"})));
  CHECK(HasKind(ca::CheckMatching(ruled, M(inst, {{"s1", "c1"}, {"s1", "c2"}})),
                ca::ViolationKind::kRuleViolated));
  CHECK(ca::CheckMatching(inst, M(inst, {{"s1", "c1"}, {"s1", "c2"}})).empty());
}

TEST_CASE("rules are downward closed") {
  const auto inst = Fig("fig1").instance;
  const auto rule = ca::FeasibilityRule::AtMost(1, Cs(inst, {"c1", "c2", "c3"}));
  CHECK(rule.Allows(Cs(inst, {"c1"})));
  CHECK_FALSE(rule.Allows(Cs(inst, {"c1", "c3"})));
  const auto ex = ca::FeasibilityRule::Exclude(Cs(inst, {"c1", "c2"}),
                                               ca::StudentId(0));
  CHECK(ex.AppliesTo(ca::StudentId(0)));
  CHECK_FALSE(ex.AppliesTo(ca::StudentId(1)));
  CHECK(ex.Allows(Cs(inst, {"c1", "c3"})));
  CHECK_FALSE(ex.Allows(Cs(inst, {"c2", "c1"})));
}

TEST_CASE("matching size and completeness") {
  const auto f = Fig("fig1");
  const auto r = ca::MatchingSize(f.instance, *f.matching);
  CHECK(r.size == 3);
  CHECK(r.student_complete);
  CHECK_FALSE(r.course_complete);  // c1 is empty
}

TEST_CASE("matching keeps pairs sorted and unique") {
  const auto inst = Fig("fig1").instance;
  const auto m = M(inst, {{"s2", "c2"}, {"s1", "c3"}, {"s2", "c2"}});
  CHECK(m.size() == 2);
  CHECK(ca::Describe(inst, m) == "{(s1,c3), (s2,c2)}");
  CHECK(m.CoursesOf(inst.StudentByLabel("s1")) == Cs(inst, {"c3"}));
}

TEST_CASE("restricting courses drops them from lists and rules") {
  auto inst = Fig("fig1").instance;
  inst.rules.push_back(ca::FeasibilityRule::Exclude(Cs(inst, {"c1", "c3"})));
  inst.rules.push_back(ca::FeasibilityRule::AtMost(1, Cs(inst, {"c2", "c3"})));
  const auto sub = ca::RestrictCourses(inst, {true, true, false});
  CHECK(sub.instance.num_courses() == 2);
  CHECK(sub.instance.students[0].prefs == Cs(sub.instance, {"c1", "c2"}));
  REQUIRE(sub.instance.rules.size() == 1);
  CHECK(sub.instance.rules[0].courses == Cs(sub.instance, {"c2"}));
  CHECK_FALSE(sub.mapped[2].has_value());
  CHECK(sub.original[1] == inst.CourseByLabel("c2"));
}

TEST_CASE("lower quota deficits") {
  auto inst = Fig("fig1").instance;
  inst.courses[0].lower_quota = 1;
  const auto f = Fig("fig1");
  CHECK(ca::LowerQuotaDeficits(inst, *f.matching) == Cs(inst, {"c1"}));
}
