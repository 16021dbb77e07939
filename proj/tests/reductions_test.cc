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

#include "coursealloc/oracle.h"
#include "coursealloc/reductions.h"
#include "coursealloc/verify.h"
#include "test_support.h"

namespace ca = coursealloc;
using ca::ExactMmMode;
using ca::StabilityNotion;
using namespace ca::testing;

TEST_CASE("subset-sum gadget is size-blocked exactly when a subset hits") {
  const auto hit = ca::GadgetSubsetSum({{1, 2, 3}, 5});
  REQUIRE(hit.matching);
  CHECK_FALSE(ca::Verify(hit.instance, *hit.matching,
                         StabilityNotion::kPairSize).stable());
  const auto miss = ca::GadgetSubsetSum({{2, 4}, 3});
  CHECK(ca::Verify(miss.instance, *miss.matching, StabilityNotion::kPairSize)
            .stable());
  CHECK(miss.instance.courses[0].label == "b");
  CHECK(miss.instance.students[0].credit_limit == 6);
}

TEST_CASE("hospitals with sizes: pair mode reproduces the three-course example") {
  const auto inst = ca::ReduceHrs(Fig5Hrs(), ca::HrsMode::kPair);
  CHECK(inst == Fig("fig5").instance);
  const auto m = ca::HrsMatchingToCa(Fig5Hrs(), ca::HrsMode::kPair,
                                     {{2, 0}, {1, 1}});
  CHECK(m == M(inst, {{"s1", "c3"}, {"s2", "c2"}}));
}

TEST_CASE("hospitals with sizes: first-coalition mode adds dummies") {
  auto in = Fig5Hrs();
  in.hospitals[1].quota = 2;  // this construction needs quota 2 everywhere
  CHECK_THROWS_AS(ca::ReduceHrs(Fig5Hrs(), ca::HrsMode::kFirstCoalition),
                  ca::InputError);
  const auto inst = ca::ReduceHrs(in, ca::HrsMode::kFirstCoalition);
  CHECK(inst.num_students() == 2);
  CHECK(inst.num_courses() == 5);
  CHECK(inst.FindCourse("d1").has_value());
  CHECK(inst.FindCourse("d2").has_value());
  CHECK(ca::ValidateInstance(inst).empty());
  // s2 holds one credit, below two, so it also takes its dummy.
  const auto m = ca::HrsMatchingToCa(in, ca::HrsMode::kFirstCoalition,
                                     {{2, 0}, {1, 1}});
  CHECK(m.Contains(inst.StudentByLabel("s2"), inst.CourseByLabel("d2")));
  CHECK_FALSE(m.Contains(inst.StudentByLabel("s1"), inst.CourseByLabel("d1")));
  CHECK(ca::CheckMatching(inst, m).empty());
}

namespace {

// m1, m2 both rank w1 then w2; w1 and w2 tie in the women's master list.
ca::SmtiInput TiedPair() {
  ca::SmtiInput in;
  in.men = {{"m1", {0, 1}}, {"m2", {0, 1}}};
  in.women = {{"w1", {0, 1}}, {"w2", {0, 1}}};
  in.master_list_men = {0, 1};
  in.master_list_women = {{0, 1}};
  return in;
}

}  // namespace

TEST_CASE("stable marriage with ties: coalition construction") {
  const auto in = TiedPair();
  const auto inst = ca::ReduceSmtiCoalition(in);
  CHECK(ca::ValidateInstance(inst).empty());
  const auto c1 = inst.CourseByLabel("c1");
  CHECK(inst.course(c1).credits == 1);
  CHECK(inst.course(inst.CourseByLabel("c1p")).credits == 1);
  CHECK(inst.course(inst.CourseByLabel("c2")).credits == 2);
  for (const auto& s : inst.students) CHECK(s.credit_limit == 2);
  const auto m = ca::SmtiMatchingToCoalition(in, {{0, 0}, {1, 1}});
  CHECK(ca::CheckMatching(inst, m).empty());
}

TEST_CASE("stable marriage with ties: distinct-credit construction") {
  const auto in = TiedPair();
  const auto inst = ca::ReduceSmtiDistinctCredits(in);
  CHECK(ca::ValidateInstance(inst).empty());
  // Positions 1 and 2 of 2 get 4 and 3 credits, swapped by the tie.
  CHECK(inst.course(inst.CourseByLabel("c1")).credits == 3);
  CHECK(inst.course(inst.CourseByLabel("c2")).credits == 4);
  for (const auto& s : inst.students) CHECK(s.credit_limit == 4);
  const auto m = ca::SmtiMatchingToDistinctCredits(in, {{0, 0}, {1, 1}});
  CHECK(ca::CheckMatching(inst, m).empty());
}

TEST_CASE("smti input checks") {
  auto in = TiedPair();
  in.master_list_women = {{0, 1}, {0}};
  CHECK_THROWS_AS(ca::ReduceSmtiCoalition(in), ca::InputError);
}

TEST_CASE("graph gadgets need every w vertex to have degree two") {
  ca::GraphInput g;
  g.left = 3;
  g.right = 1;
  g.edges = {{0, 0}, {1, 0}, {2, 0}};
  g.k = 1;
  CHECK_THROWS_AS(ca::ReduceMinMm(g), ca::InputError);
  CHECK_THROWS_AS(ca::ReduceExactMm(g, ExactMmMode::kPairSize),
                  ca::InputError);
}

TEST_CASE("forward matchings require a maximal matching of size K") {
  const auto g = ca::SmallGadgetGraph();
  CHECK_THROWS_AS(ca::MinMmForwardMatching(g, {{0, 0}}), ca::InputError);
  CHECK_THROWS_AS(ca::ExactMmForwardMatching(g, ExactMmMode::kPairSize,
                                             {{0, 0}, {0, 1}}),
                  ca::InputError);
}

TEST_CASE("forward matchings are stable for every maximal matching of size K") {
  const auto g = ca::SmallGadgetGraph();
  const auto min_mm = ca::ReduceMinMm(g);
  int checked = 0;
  for (const auto& mm : MaximalMatchings(g)) {
    if (static_cast<int>(mm.size()) != g.k) continue;
    ++checked;
    const auto m7 = ca::MinMmForwardMatching(g, mm);
    CHECK(ca::CheckMatching(min_mm, m7).empty());
    CHECK(ca::MatchingSize(min_mm, m7).course_complete);
    CHECK(ca::Verify(min_mm, m7, StabilityNotion::kFirstCoalition).stable());
    for (ExactMmMode mode :
         {ExactMmMode::kPairSize, ExactMmMode::kPairSizeBounded}) {
      const auto inst = ca::ReduceExactMm(g, mode);
      const auto m8 = ca::ExactMmForwardMatching(g, mode, mm);
      CHECK(ca::CheckMatching(inst, m8).empty());
      CHECK(ca::Verify(inst, m8, StabilityNotion::kPairSize).stable());
    }
    const auto lq = ca::ReduceExactMm(g, ExactMmMode::kLqClosures);
    const auto m9 = ca::ExactMmForwardMatching(g, ExactMmMode::kLqClosures, mm);
    const auto [sub, sub_m] = CloseEmptyCourses(lq, m9);
    CHECK(ca::LowerQuotaDeficits(sub.instance, sub_m).empty());
    CHECK(ca::Verify(sub.instance, sub_m, StabilityNotion::kPair).stable());
  }
  // K_{2,3} has six maximal matchings, all of size 2.
  CHECK(checked == 6);
}

TEST_CASE("random generator is deterministic") {
  auto p = SmallParams(4, 5);
  p.rules = 3;
  CHECK(ca::GenRandom(p, 7) == ca::GenRandom(p, 7));
  CHECK_FALSE(ca::GenRandom(p, 7) == ca::GenRandom(p, 8));
}

TEST_CASE("random master-list instances are consistent") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto p = SmallParams(4, 4);
    p.master_list = true;
    p.master_list_courses = seed % 2 == 0;
    p.lower_quotas = {0, 2};
    const auto inst = ca::GenRandom(p, seed);
    CAPTURE(seed);
    CHECK(ca::ValidateInstance(inst).empty());
    CHECK(inst.master_list_students.has_value());
    CHECK(inst.master_list_courses.has_value() == p.master_list_courses);
    for (const auto& c : inst.courses) CHECK(c.lower_quota <= c.upper_quota);
  }
}

TEST_CASE("random generator rejects bad parameters") {
  auto p = SmallParams(2, 1);
  p.rules = 1;
  CHECK_THROWS_AS(ca::GenRandom(p, 1), ca::InputError);
  p = SmallParams(2, 2);
  p.credits = {3, 1};
  CHECK_THROWS_AS(ca::GenRandom(p, 1), ca::InputError);
}
