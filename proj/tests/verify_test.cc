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
#include "coursealloc/verify.h"
#include "test_support.h"

namespace ca = coursealloc;
using ca::StabilityNotion;
using namespace ca::testing;

TEST_CASE("notion names round-trip") {
  for (StabilityNotion n : ca::kAllNotions) {
    CHECK(ca::ParseNotion(ca::ToString(n)) == n);
  }
  CHECK_FALSE(ca::ParseNotion("size").has_value());
  CHECK(ca::ParseVerifyMode("dp") == ca::VerifyMode::kDp);
}

TEST_CASE("pair witness drops every course ranked below the new one") {
  const auto f = Fig("fig1");
  const auto w = ca::FindPairBlocking(f.instance, *f.matching);
  REQUIRE(w);
  CHECK(w->coalition == Cs(f.instance, {"c1"}));
  CHECK(w->drop_set == Cs(f.instance, {"c3"}));
  CHECK_FALSE(ca::ReplayWitness(f.instance, *f.matching, *w));
}

TEST_CASE("three-course example: canonical first-blocking witnesses") {
  const auto inst = Fig("fig5").instance;
  struct Case {
    std::vector<std::pair<std::string, std::string>> m;
    std::string student;
    std::vector<std::string> b, d;
  };
  const std::vector<Case> cases = {
      {{{"s1", "c1"}, {"s2", "c2"}}, "s1", {"c2"}, {}},
      {{{"s1", "c2"}, {"s2", "c1"}}, "s1", {"c3"}, {"c2"}},
      {{{"s1", "c3"}, {"s2", "c1"}}, "s2", {"c2"}, {"c1"}},
      {{{"s1", "c3"}}, "s1", {"c1", "c2"}, {"c3"}},
      {{}, "s1", {"c1"}, {}},
  };
  for (const auto& c : cases) {
    const auto m = M(inst, c.m);
    CAPTURE(ca::Describe(inst, m));
    const auto w = ca::FindFirstCoalitionBlocking(inst, m);
    REQUIRE(w);
    CHECK(inst.student(w->student).label == c.student);
    CHECK(w->coalition == Cs(inst, c.b));
    CHECK(w->drop_set == Cs(inst, c.d));
    CHECK(w == ca::BlockingWitnessBruteforce(
                   inst, m, StabilityNotion::kFirstCoalition));
  }
}

TEST_CASE("one student, credits 1 and 2: size blocking needs enough credits") {
  const auto inst = Fig("sec42").instance;
  // Swapping c2 for c1 would lose a credit.
  const auto m = M(inst, {{"s1", "c2"}});
  CHECK(ca::Verify(inst, m, StabilityNotion::kPairSize).stable());
  CHECK_FALSE(ca::Verify(inst, m, StabilityNotion::kPair).stable());
}

TEST_CASE("coalition of two one-credit courses beats a two-credit one") {
  const auto inst = Fig("fig4").instance;
  const auto m = M(inst, {{"s1", "c2"}});
  CHECK(ca::Verify(inst, m, StabilityNotion::kPairSize).stable());
  const auto w = ca::FindCoalitionBlocking(inst, m);
  // c1 alone loses a credit and c3 is ranked below c2.
  CHECK_FALSE(w.has_value());
  const auto fw = ca::FindFirstCoalitionBlocking(inst, m);
  REQUIRE(fw);
  CHECK(fw->coalition == Cs(inst, {"c1", "c3"}));
  CHECK(fw->drop_set == Cs(inst, {"c2"}));
}

TEST_CASE("dp mode rejects rules and auto mode enumerates") {
  auto f = Fig("fig1");
  f.instance.rules.push_back(
      ca::FeasibilityRule::Exclude(Cs(f.instance, {"c1", "c2"})));
  ca::VerifyOptions dp;
  dp.mode = ca::VerifyMode::kDp;
  CHECK_THROWS_AS(ca::Verify(f.instance, *f.matching,
                             StabilityNotion::kCoalition, dp),
                  ca::CapabilityError);
  const auto w = ca::Verify(f.instance, *f.matching,
                            StabilityNotion::kFirstCoalition).witness;
  CHECK(w == ca::BlockingWitnessBruteforce(f.instance, *f.matching,
                                           StabilityNotion::kFirstCoalition));
}

TEST_CASE("exhaustive cap raises a capability error") {
  const auto f = Fig("fig1");
  ca::VerifyOptions opts;
  opts.mode = ca::VerifyMode::kExhaustive;
  opts.exhaustive_cap = 2;
  CHECK_THROWS_AS(ca::Verify(f.instance, *f.matching,
                             StabilityNotion::kCoalition, opts),
                  ca::CapabilityError);
}

TEST_CASE("witness replay rejects tampered witnesses") {
  const auto f = Fig("fig1");
  auto w = *ca::FindPairBlocking(f.instance, *f.matching);
  w.notion = StabilityNotion::kPairSize;  // drops 2 credits for 1
  CHECK(ca::ReplayWitness(f.instance, *f.matching, w).has_value());
  w.notion = StabilityNotion::kPair;
  w.coalition = Cs(f.instance, {"c2"});  // s1 ranks c2 below c3
  w.drop_set = {};
  CHECK(ca::ReplayWitness(f.instance, *f.matching, w).has_value());
}

TEST_CASE("fast verifiers agree with brute force on random matchings") {
  int unstable = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    std::mt19937_64 rng(seed);
    auto p = SmallParams(1 + static_cast<int>(rng() % 4),
                         2 + static_cast<int>(rng() % 4));
    p.rules = seed % 3 == 0 ? 2 : 0;
    const auto inst = ca::GenRandom(p, seed);
    const auto m = RandomMatching(inst, rng);
    for (StabilityNotion n : ca::kAllNotions) {
      CAPTURE(seed);
      CAPTURE(ca::ToString(n));
      const auto fast = ca::FindBlocking(inst, m, n);
      CHECK(fast == ca::BlockingWitnessBruteforce(inst, m, n));
      if (fast) {
        ++unstable;
        CHECK_FALSE(ca::ReplayWitness(inst, m, *fast));
      }
    }
  }
  CHECK(unstable > 0);
}
