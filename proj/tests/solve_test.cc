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
#include "coursealloc/solve.h"
#include "test_support.h"

namespace ca = coursealloc;
using ca::LqMode;
using ca::StabilityNotion;
using namespace ca::testing;

TEST_CASE("round schedule groups courses by decreasing credits") {
  const auto inst = Fig("fig1").instance;
  const auto s = ca::BuildRoundSchedule(inst);
  CHECK(s.credits == std::vector<ca::Credits>{2, 1});
  CHECK(s.courses[0] == Cs(inst, {"c3"}));
  CHECK(s.courses[1] == Cs(inst, {"c1", "c2"}));
}

TEST_CASE("da on the three-course example") {
  const auto f = Fig("fig1");
  ca::DaTrace trace;
  const auto m = ca::SolvePairSizeDa(f.instance, &trace);
  CHECK(m == *f.matching);
  CHECK(trace.after_round.size() == 2);
  CHECK(trace.after_round[0] == M(f.instance, {{"s1", "c3"}}));
  CHECK(ca::Verify(f.instance, m, StabilityNotion::kPairSize).stable());
}

TEST_CASE("da is pair-size stable and respects rules") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto p = SmallParams(1 + static_cast<int>(seed % 5),
                         1 + static_cast<int>(seed % 6));
    if (p.courses >= 2) p.rules = static_cast<int>(seed % 3);
    const auto inst = ca::GenRandom(p, seed);
    const auto m = ca::SolvePairSizeDa(inst);
    CAPTURE(seed);
    CHECK(ca::CheckMatching(inst, m).empty());
    CHECK(ca::Verify(inst, m, StabilityNotion::kPairSize).stable());
  }
}

TEST_CASE("master-list serial dictatorship is pair stable") {
  const auto inst = Fig("ml").instance;
  CHECK(ca::SolveMasterList(inst) == M(inst, {{"s1", "c1"}, {"s2", "c2"}}));
  CHECK_THROWS_AS(ca::SolveMasterList(Fig("fig1").instance), ca::InputError);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto p = SmallParams(2 + static_cast<int>(seed % 4),
                         2 + static_cast<int>(seed % 3));
    p.master_list = true;
    const auto inst2 = ca::GenRandom(p, seed);
    const auto m = ca::SolveMasterList(inst2);
    CAPTURE(seed);
    CHECK(ca::CheckMatching(inst2, m).empty());
    CHECK(ca::Verify(inst2, m, StabilityNotion::kPair).stable());
  }
}

TEST_CASE("max stable search on the three-course example") {
  const auto inst = Fig("fig5").instance;
  CHECK_FALSE(ca::MaxStableSearch(inst, StabilityNotion::kPair));
  CHECK_FALSE(ca::MaxStableSearch(inst, StabilityNotion::kFirstCoalition));
  const auto r = ca::MaxStableSearch(inst, StabilityNotion::kCoalition);
  REQUIRE(r);
  CHECK(r->size == 3);
  CHECK(r->matching == M(inst, {{"s1", "c3"}, {"s2", "c2"}}));
}

TEST_CASE("node cap raises a capability error") {
  ca::SearchOptions opts;
  opts.node_cap = 1;
  CHECK_THROWS_AS(ca::MaxStableSearch(Fig("fig2").instance,
                                      StabilityNotion::kPairSize,
                                      LqMode::kNone, opts),
                  ca::CapabilityError);
}

TEST_CASE("lq mode names") {
  CHECK(ca::ParseLqMode("nc") == LqMode::kNoClosures);
  CHECK(std::string(ca::ToString(LqMode::kClosures)) == "cl");
  CHECK_FALSE(ca::ParseLqMode("closures"));
}

TEST_CASE("max stable search matches the oracle") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto p = SmallParams(1 + static_cast<int>(seed % 3),
                         2 + static_cast<int>(seed % 3));
    p.lower_quotas = {0, 1};
    const auto inst = ca::GenRandom(p, seed);
    if (AcceptablePairs(inst) > 12) continue;
    for (LqMode lq : {LqMode::kNone, LqMode::kNoClosures, LqMode::kClosures}) {
      const auto brute = ca::MaxStableBrute(inst, lq);
      for (StabilityNotion n : ca::kAllNotions) {
        CAPTURE(seed);
        CAPTURE(ca::ToString(lq));
        CAPTURE(ca::ToString(n));
        const auto r = lq == LqMode::kClosures
                           ? ca::LqClosuresMax(inst, n)
                           : ca::MaxStableSearch(inst, n, lq);
        REQUIRE(r.has_value() == brute.max_size(n).has_value());
        if (r) CHECK(r->size == *brute.max_size(n));
      }
    }
  }
}

TEST_CASE("no-closures serial dictatorship keeps only lower-quota-complete results") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto p = SmallParams(2 + static_cast<int>(seed % 3), 2);
    p.master_list = true;
    p.lower_quotas = {0, 1};
    const auto inst = ca::GenRandom(p, seed);
    const auto sd = ca::SolveMasterList(inst);
    const auto r = ca::LqNoClosuresMasterListPair(inst);
    CAPTURE(seed);
    CHECK(r.has_value() == ca::LowerQuotaDeficits(inst, sd).empty());
    if (r) CHECK(*r == sd);
  }
}
