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

// Line-based text formats.
//
//   # comment
//   [students]
//   s1 credits=2 prefs=c1,c3,c2
//   [courses]
//   c1 credits=1 upper=1 prefs=s2,s1
//   c3 credits=2 upper=1 lower=1 prefs=s1
//   [masterlist-students]
//   s1,s2
//   [masterlist-courses]
//   c1,c2,c3
//   [constraints]
//   exclude c1,c2
//   atmost 1 of c1,c2,c3 for s1
//   [matching]
//   s1 c3
//
// Source problems for `reduce` use the same lexical rules with their own
// sections: [subset-sum]; [graph] + [edges]; [residents] + [hospitals];
// [men] + [women] + [masterlist-men] + [masterlist-women]. Each may carry a
// [matching] section naming a solution of the source problem.

#ifndef COURSEALLOC_INSTANCE_IO_H_
#define COURSEALLOC_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coursealloc/model.h"
#include "coursealloc/reductions.h"

namespace coursealloc {

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message);

  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  std::optional<Matching> matching;
};

// With `validate`, the first ValidateInstance violation is raised as an
// InputError after parsing succeeds.
ParsedInstance ParseInstance(std::string_view text, bool validate = true);

std::string SerializeInstance(const Instance& inst,
                              const Matching* matching = nullptr);
std::string SerializeMatching(const Instance& inst, const Matching& m);

// ---- source problems -------------------------------------------------------

//   [subset-sum]
//   target=3
//   sizes=1,2,3
SubsetSumInput ParseSubsetSum(std::string_view text);

//   [graph]
//   left=2 right=3 k=2
//   [edges]
//   1 1          # u1 - w1, 1-based
//   [matching]
//   1 1
struct ParsedGraph {
  GraphInput graph;
  std::optional<std::vector<std::pair<int, int>>> matching;  // 0-based
};
ParsedGraph ParseGraph(std::string_view text);

//   [residents]
//   r1 size=1 prefs=h2,h1
//   [hospitals]
//   h1 quota=2 prefs=r1,r3,r2
//   [matching]
//   r1 h1
struct ParsedHrs {
  HrsInput input;
  std::optional<std::vector<std::pair<int, int>>> matching;  // (r, h)
};
ParsedHrs ParseHrs(std::string_view text);

//   [men]
//   m1 prefs=w1,w2
//   [women]
//   w1 prefs=m1
//   [masterlist-men]
//   m1,m2
//   [masterlist-women]
//   w1,w2        # one line per tie group
//   w3
//   [matching]
//   m1 w1
struct ParsedSmti {
  SmtiInput input;
  std::optional<std::vector<std::pair<int, int>>> matching;  // (man, woman)
};
ParsedSmti ParseSmti(std::string_view text);

// Parses `text` in the format of `source` and builds the matching
// course-allocation instance, with the image of the source matching if one
// is given. Sources: subset-sum, hrs, hrs-fc, smti, smti-distinct, min-mm,
// exact-mm, exact-mm-bounded, exact-mm-lq.
Fixture ReduceFromText(std::string_view source, std::string_view text);

}  // namespace coursealloc

#endif  // COURSEALLOC_INSTANCE_IO_H_
