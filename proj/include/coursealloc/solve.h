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

// Constructive solvers: deferred acceptance over credit rounds, serial
// dictatorship along a master list, and exhaustive maximum-size stable
// search with optional lower quotas.

#ifndef COURSEALLOC_SOLVE_H_
#define COURSEALLOC_SOLVE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coursealloc/model.h"
#include "coursealloc/verify.h"

namespace coursealloc {

// Credit groups in strictly decreasing order; groups partition the courses.
struct RoundSchedule {
  std::vector<Credits> credits;
  std::vector<std::vector<CourseId>> courses;
};

RoundSchedule BuildRoundSchedule(const Instance& inst);

struct DaTrace {
  RoundSchedule schedule;
  std::vector<Matching> after_round;  // snapshot at the end of each round
  std::int64_t applications = 0;
};

// Deferred acceptance run one credit group at a time, largest credits
// first. Within a round, applicants are served from a FIFO queue seeded in
// student index order; displaced students rejoin at the tail. The result is
// pair-size-stable and respects enrolment rules.
Matching SolvePairSizeDa(const Instance& inst, DaTrace* trace = nullptr);

// Serial dictatorship along the student master list. Throws InputError if the
// master list is missing or disagrees with some course's preferences.
Matching SolveMasterList(const Instance& inst);

enum class LqMode {
  kNone,        // lower quotas ignored
  kNoClosures,  // every course must meet its lower quota
  kClosures,    // a course below its lower quota is closed (no students)
};

const char* ToString(LqMode mode);  // "none", "nc", "cl"
std::optional<LqMode> ParseLqMode(std::string_view name);

struct SearchOptions {
  std::int64_t node_cap = 10'000'000;
  std::int64_t open_set_cap = std::int64_t{1} << 16;
  VerifyOptions verify;
};

struct StableSearchResult {
  Matching matching;
  Credits size = 0;
  std::vector<CourseId> open_courses;  // kClosures: open courses with q- > 0
};

// A maximum-size `notion`-stable matching meeting the lower-quota rule of
// `lq`, or nullopt if none exists. Ties go to the lexicographically smallest
// pair list. Throws CapabilityError when the search budget runs out.
std::optional<StableSearchResult> MaxStableSearch(
    const Instance& inst, StabilityNotion notion, LqMode lq = LqMode::kNone,
    const SearchOptions& opts = {});

// Serial dictatorship, kept only if every course meets its lower quota.
std::optional<Matching> LqNoClosuresMasterListPair(const Instance& inst);

// Maximum over all open/closed choices for the courses with a positive lower
// quota. Closed courses are deleted before stability is checked, so nobody
// can block with them. Courses with no lower quota are always open, so an
// instance may have no admissible stable matching at all.
std::optional<StableSearchResult> LqClosuresMax(const Instance& inst,
                                                StabilityNotion notion,
                                                const SearchOptions& opts = {});

}  // namespace coursealloc

#endif  // COURSEALLOC_SOLVE_H_
