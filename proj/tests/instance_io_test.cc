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

#include <string>

#include "coursealloc/instance_io.h"
#include "test_support.h"

namespace ca = coursealloc;
using namespace ca::testing;

namespace {

const char* const kThreeCourses = R"(# three courses, two students
[students]
s1 credits=2 prefs=c1,c3,c2
s2 credits=1 prefs=c2,c1
[courses]
c1 credits=1 upper=1 prefs=s2,s1
c2 credits=1 upper=1 prefs=s1,s2
c3 credits=2 upper=1 prefs=s1
[matching]
s1 c3
s2 c2
)";

}  // namespace

TEST_CASE("parse the three-course example") {
  const auto p = ca::ParseInstance(kThreeCourses);
  const auto f = Fig("fig1");
  CHECK(p.instance == f.instance);
  REQUIRE(p.matching);
  CHECK(*p.matching == *f.matching);
}

TEST_CASE("serialization round-trips every fixture") {
  for (const auto& [name, f] : ca::Fixtures()) {
    CAPTURE(name);
    const auto text = ca::SerializeInstance(
        f.instance, f.matching ? &*f.matching : nullptr);
    const auto back = ca::ParseInstance(text);
    CHECK(back.instance == f.instance);
    CHECK(back.matching == f.matching);
    CHECK(ca::SerializeInstance(back.instance, back.matching ? &*back.matching
                                                             : nullptr) == text);
  }
}

TEST_CASE("rules, lower quotas and master lists round-trip") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto p = SmallParams(3, 4);
    p.rules = 3;
    p.master_list = seed % 2 == 1;
    p.master_list_courses = seed % 3 == 0;
    p.lower_quotas = {0, 2};
    const auto inst = ca::GenRandom(p, seed);
    CAPTURE(seed);
    CHECK(ca::ParseInstance(ca::SerializeInstance(inst)).instance == inst);
  }
}

TEST_CASE("constraint syntax") {
  const auto p = ca::ParseInstance(R"([students]
s1 credits=3 prefs=a,b,c
[courses]
a credits=1 upper=1 prefs=s1
b credits=1 upper=1 prefs=s1
c credits=1 upper=1 prefs=s1
[constraints]
exclude a,b
atmost 1 of b,c for s1
)");
  REQUIRE(p.instance.rules.size() == 2);
  CHECK(p.instance.rules[0].kind ==
        ca::FeasibilityRule::Kind::kExcludedCombination);
  CHECK_FALSE(p.instance.rules[0].owner.has_value());
  CHECK(p.instance.rules[1].k == 1);
  CHECK(p.instance.rules[1].owner == ca::StudentId(0));
}

TEST_CASE("parse errors carry the line number") {
  try {
    ca::ParseInstance("[students]\ns1 credits=2 prefs=c9\n[courses]\n");
    FAIL("expected a parse error");
  } catch (const ca::ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
  CHECK_THROWS_AS(ca::ParseInstance("[students]\ns1 credits=x\n"),
                  ca::ParseError);
  CHECK_THROWS_AS(ca::ParseInstance("[teachers]\n"), ca::ParseError);
  CHECK_THROWS_AS(ca::ParseInstance("[students]\n[students]\n"),
                  ca::ParseError);
}

TEST_CASE("empty input is an empty instance") {
  const auto p = ca::ParseInstance("");
  CHECK(p.instance.num_students() == 0);
  CHECK(p.instance.num_courses() == 0);
  CHECK_FALSE(p.matching);
}

TEST_CASE("invalid instances are rejected after parsing") {
  const char* text = R"([students]
s1 credits=1 prefs=c1
[courses]
c1 credits=1 upper=1 prefs=
)";
  CHECK_THROWS_AS(ca::ParseInstance(text), ca::InputError);
  CHECK_NOTHROW(ca::ParseInstance(text, /*validate=*/false));
}

TEST_CASE("source formats") {
  const auto ss = ca::ParseSubsetSum("[subset-sum]\ntarget=3\nsizes=1,2,3\n");
  CHECK(ss.target == 3);
  CHECK(ss.sizes == std::vector<ca::Credits>{1, 2, 3});

  const auto g = ca::ParseGraph(
      "[graph]\nleft=2 right=1 k=1\n[edges]\n1 1\n2 1\n[matching]\n2 1\n");
  CHECK(g.graph.left == 2);
  CHECK(g.graph.edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
  REQUIRE(g.matching);
  CHECK(*g.matching == std::vector<std::pair<int, int>>{{1, 0}});

  const auto h = ca::ParseHrs(R"([residents]
r1 size=1 prefs=h2,h1
r2 size=1 prefs=h1,h2
r3 size=2 prefs=h1
[hospitals]
h1 quota=2 prefs=r1,r3,r2
h2 quota=1 prefs=r2,r1
)");
  const auto want = Fig5Hrs();
  REQUIRE(h.input.residents.size() == 3);
  CHECK(h.input.residents[2].size == 2);
  CHECK(h.input.hospitals[0].prefs == want.hospitals[0].prefs);
  CHECK(h.input.residents[0].prefs == want.residents[0].prefs);

  const auto s = ca::ParseSmti(R"([men]
m1 prefs=w1,w2
m2 prefs=w1
[women]
w1 prefs=m1,m2
w2 prefs=m1
[masterlist-men]
m1,m2
[masterlist-women]
w1,w2
[matching]
m1 w2
)");
  CHECK(s.input.master_list_women ==
        std::vector<std::vector<int>>{{0, 1}});
  REQUIRE(s.matching);
  CHECK(*s.matching == std::vector<std::pair<int, int>>{{0, 1}});
}
