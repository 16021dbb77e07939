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

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "coursealloc/cli.h"
#include "coursealloc/instance_io.h"
#include "test_support.h"

namespace ca = coursealloc;
namespace cli = coursealloc::cli;
using namespace ca::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Invoke(const std::vector<std::string>& args, const std::string& input) {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::Run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string FixtureText(const std::string& name) {
  const auto f = Fig(name);
  return ca::SerializeInstance(f.instance,
                               f.matching ? &*f.matching : nullptr);
}

}  // namespace

TEST_CASE("verify prints a witness and exits 10") {
  const auto r = Invoke({"verify", "--notion", "pair", "-"}, FixtureText("fig1"));
  CHECK(r.code == cli::kExitUnstable);
  CHECK(r.out.find("unstable under pair") != std::string::npos);
  CHECK(r.out.find("s1 blocks with c1 dropping c3") != std::string::npos);
}

TEST_CASE("verify exits 0 on a stable matching") {
  const auto r =
      Invoke({"verify", "--notion", "coalition", "-"}, FixtureText("fig1"));
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("stable under coalition") == 0);
}

TEST_CASE("verify json report") {
  const auto r = Invoke({"--json", "verify", "--notion", "first-coalition", "-"},
                        FixtureText("fig1"));
  CHECK(r.code == cli::kExitUnstable);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "coursealloc.report/1");
  CHECK(j["status"] == "unstable");
  CHECK(j["witness"]["student"] == "s1");
  CHECK(j["matching"].size() == 2);
}

TEST_CASE("dp mode with rules is a usage error") {
  const std::string text = R"([students]
s1 credits=2 prefs=c1,c2
[courses]
c1 credits=1 upper=1 prefs=s1
c2 credits=1 upper=1 prefs=s1
[constraints]
exclude c1,c2
[matching]
s1 c1
)";
  const auto r =
      Invoke({"verify", "--notion", "coalition", "--mode", "dp", "-"}, text);
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("rules") != std::string::npos);
}

TEST_CASE("solve and max") {
  const auto s =
      Invoke({"solve", "--alg", "pair-size-da", "-"}, FixtureText("fig5"));
  CHECK(s.code == cli::kExitOk);
  CHECK(s.out.find("# size=3") == 0);
  const auto ml = Invoke({"solve", "--alg", "serial-dictatorship", "-"},
                         FixtureText("ml"));
  CHECK(ml.code == cli::kExitOk);
  const auto none = Invoke({"max", "--notion", "pair", "-"}, FixtureText("fig5"));
  CHECK(none.code == cli::kExitNoStable);
  CHECK(none.out.find("no stable matching") != std::string::npos);
  const auto some =
      Invoke({"max", "--notion", "pair-size", "-"}, FixtureText("fig5"));
  CHECK(some.code == cli::kExitOk);
}

TEST_CASE("budget exhaustion exits 3") {
  const auto r = Invoke({"max", "--notion", "pair-size", "--node-cap", "1", "-"},
                        FixtureText("fig2"));
  CHECK(r.code == cli::kExitBudget);
  const auto o =
      Invoke({"oracle", "--max-pairs", "2", "-"}, FixtureText("fig5"));
  CHECK(o.code == cli::kExitBudget);
}

TEST_CASE("oracle counts") {
  const auto r = Invoke({"--json", "oracle", "-"}, FixtureText("fig5"));
  CHECK(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_matchings"] == 11);
  CHECK(j["notions"]["pair"]["stable_count"] == 0);
  CHECK(j["notions"]["pair"]["max_size"].is_null());
  CHECK(j["notions"]["pair-size"]["max_size"] == 3);
}

TEST_CASE("gen is deterministic and parses back") {
  const std::vector<std::string> args = {"gen", "--students", "3", "--courses",
                                         "4", "--rules", "2", "--seed", "11"};
  const auto a = Invoke(args, "");
  const auto b = Invoke(args, "");
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK_NOTHROW(ca::ParseInstance(a.out));
}

TEST_CASE("reduce from hospitals with sizes") {
  const auto r = Invoke({"reduce", "--from", "hrs", "-"}, R"([residents]
r1 size=1 prefs=h2,h1
r2 size=1 prefs=h1,h2
r3 size=2 prefs=h1
[hospitals]
h1 quota=2 prefs=r1,r3,r2
h2 quota=1 prefs=r2,r1
)");
  CHECK(r.code == cli::kExitOk);
  CHECK(ca::ParseInstance(r.out).instance == Fig("fig5").instance);
  const auto bad = Invoke({"reduce", "--from", "sat", "-"}, "");
  CHECK(bad.code == cli::kExitUsage);
}

TEST_CASE("usage errors exit 2") {
  CHECK(Invoke({}, "").code == cli::kExitUsage);
  CHECK(Invoke({"verify", "-"}, "").code == cli::kExitUsage);
  CHECK(Invoke({"verify", "--notion", "strong", "-"}, FixtureText("fig1")).code ==
        cli::kExitUsage);
  const auto parse = Invoke({"--json", "solve", "--alg", "pair-size-da", "-"},
                            "[students]\ns1 credits=\n");
  CHECK(parse.code == cli::kExitUsage);
  const auto j = nlohmann::json::parse(parse.out);
  CHECK(j["status"] == "error");
  CHECK(j["exit_code"] == 2);
  CHECK(Invoke({"--help"}, "").code == cli::kExitOk);
}
