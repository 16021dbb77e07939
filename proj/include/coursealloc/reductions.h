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

// Instance factories: gadgets from hardness reductions (with the matchings
// their forward constructions produce), seeded random instances, and the
// small worked examples used throughout the tests.
//
// Gadget labels: s{i}_{r} for the r-th student built from vertex w_i,
// d{i}_{r} and b{i}_{r} for the per-vertex courses, c{j} for vertex u_j, and
// p{k}, e, e1, e2, f, q, r as named in the constructions. All indices are
// 1-based.

#ifndef COURSEALLOC_REDUCTIONS_H_
#define COURSEALLOC_REDUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coursealloc/model.h"

namespace coursealloc {

struct Fixture {
  Instance instance;
  std::optional<Matching> matching;
};

// ---- subset sum -----------------------------------------------------------

struct SubsetSumInput {
  std::vector<Credits> sizes;
  Credits target = 1;
};

// Courses e1..en carry the element sizes, course b carries the target, and
// the single student s (limit = total size, list b first) holds every e
// course. The matching is size-blocked exactly when some subset hits the
// target.
Fixture GadgetSubsetSum(const SubsetSumInput& x);

// ---- hospitals / residents with sizes --------------------------------------

struct HrsInput {
  struct Resident {
    std::string label;
    int size = 1;
    std::vector<int> prefs;  // hospital indices
  };
  struct Hospital {
    std::string label;
    int quota = 1;
    std::vector<int> prefs;  // resident indices
  };
  std::vector<Resident> residents;
  std::vector<Hospital> hospitals;
};

enum class HrsMode {
  kPair,            // hospitals become students, residents become courses
  kFirstCoalition,  // as kPair, plus a one-credit dummy course per student
};

// Students s{i} (hospital i), courses c{j} (resident j), dummies d{i}.
Instance ReduceHrs(const HrsInput& in, HrsMode mode);

// Image of an HRS matching given as (resident, hospital) index pairs. In
// kFirstCoalition mode students left below two credits also take their
// dummy course.
Matching HrsMatchingToCa(const HrsInput& in, HrsMode mode,
                         const std::vector<std::pair<int, int>>& rh);

// ---- stable marriage with ties ---------------------------------------------

struct SmtiInput {
  struct Agent {
    std::string label;
    std::vector<int> prefs;  // indices on the other side
  };
  std::vector<Agent> men;
  std::vector<Agent> women;
  std::vector<int> master_list_men;
  // Women in master-list order; each group is one tie (size 1 or 2).
  std::vector<std::vector<int>> master_list_women;
};

// Coalition construction: an untied woman becomes a 2-credit course c{j};
// in a tie the first woman becomes a 1-credit course c{j} with a 1-credit
// companion c{j}p, the second a 2-credit course. Students s{i} take two
// credits.
Instance ReduceSmtiCoalition(const SmtiInput& in);

// Distinct-credit construction with credits scaled to integers: the course
// at master-list position j (1-based, of n) gets 2n - j + 1 credits, tied
// neighbours swap, and every student takes up to 2n.
Instance ReduceSmtiDistinctCredits(const SmtiInput& in);

// Images of a marriage given as (man, woman) index pairs.
Matching SmtiMatchingToCoalition(const SmtiInput& in,
                                 const std::vector<std::pair<int, int>>& mw);
Matching SmtiMatchingToDistinctCredits(
    const SmtiInput& in, const std::vector<std::pair<int, int>>& mw);

// ---- graph gadgets ---------------------------------------------------------

// Bipartite graph with U = {u_1..u_left}, W = {w_1..w_right}; edges are
// 0-based (u, w) index pairs.
struct GraphInput {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
  int k = 0;
};

// Minimum maximal matching, first-coalition variant.
Instance ReduceMinMm(const GraphInput& g);

enum class ExactMmMode {
  kPairSize,         // students p_1..p_{n1-K} list every c_j
  kPairSizeBounded,  // one student p_j per c_j, listing c_j only
  kLqClosures,       // lower quotas with closures, pair stability
};

const char* ToString(ExactMmMode mode);

Instance ReduceExactMm(const GraphInput& g, ExactMmMode mode);

// The matchings built by the forward direction of each construction from a
// maximal graph matching (0-based (u, w) pairs) of size exactly K. Throws
// InputError if `edges` is not such a matching.
Matching MinMmForwardMatching(const GraphInput& g,
                              const std::vector<std::pair<int, int>>& edges);
Matching ExactMmForwardMatching(const GraphInput& g, ExactMmMode mode,
                                const std::vector<std::pair<int, int>>& edges);

// The complete bipartite graph K_{2,3} with K = 2 used in the worked gadget
// examples.
GraphInput SmallGadgetGraph();

// ---- random instances ------------------------------------------------------

struct RandomParams {
  int students = 3;
  int courses = 3;
  std::pair<Credits, Credits> credits{1, 2};
  std::pair<Credits, Credits> limits{1, 4};
  std::pair<int, int> upper_quotas{1, 2};
  std::pair<int, int> lower_quotas{0, 0};  // clipped to the upper quota
  double density = 0.6;                    // chance a pair is acceptable
  bool master_list = false;                // students ranked globally
  bool master_list_courses = false;        // courses ranked globally
  int rules = 0;
};

// Deterministic for a given seed. Throws InputError for empty ranges or
// rules requested with fewer than two courses.
Instance GenRandom(const RandomParams& params, std::uint64_t seed);

// ---- worked examples -------------------------------------------------------

// fig1..fig5, sec42 (one student, credits 1 and 2) and ml (two students in
// a master list competing for two 2-credit courses).
std::map<std::string, Fixture> Fixtures();

}  // namespace coursealloc

#endif  // COURSEALLOC_REDUCTIONS_H_
