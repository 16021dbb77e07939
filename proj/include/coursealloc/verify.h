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

// Stability verification under the four notions, with blocking witnesses.
//
// Witness selection is deterministic: lowest student index first, then the
// coalition whose sorted preference-rank vector is lexicographically
// smallest (a proper prefix counts as smaller), then the drop set chosen the
// same way. Pair witnesses instead use the drop-maximal set: every assigned
// course the student ranks below the new course.

#ifndef COURSEALLOC_VERIFY_H_
#define COURSEALLOC_VERIFY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coursealloc/model.h"

namespace coursealloc {

// Ordered strongest first: kPair => kFirstCoalition => kCoalition =>
// kPairSize.
enum class StabilityNotion { kPair, kFirstCoalition, kCoalition, kPairSize };

inline constexpr std::array<StabilityNotion, 4> kAllNotions = {
    StabilityNotion::kPair, StabilityNotion::kFirstCoalition,
    StabilityNotion::kCoalition, StabilityNotion::kPairSize};

// "pair", "pair-size", "coalition", "first-coalition".
const char* ToString(StabilityNotion notion);
std::optional<StabilityNotion> ParseNotion(std::string_view name);

struct BlockingWitness {
  StabilityNotion notion = StabilityNotion::kPair;
  StudentId student;
  std::vector<CourseId> coalition;  // by the student's preference order
  std::vector<CourseId> drop_set;   // by the student's preference order

  bool operator==(const BlockingWitness&) const = default;
};

// Condition 1 data for one course.
struct AdmissionStatus {
  CourseId course;
  bool undersubscribed = false;
  std::optional<StudentId> worst_assigned;
  int worst_rank = -1;  // course's rank of worst_assigned

  bool Admits(const PreferenceIndex& ranks, StudentId s) const {
    if (undersubscribed) return true;
    if (!worst_assigned) return false;
    const int r = ranks.CourseRank(course, s);
    return r >= 0 && r < worst_rank;
  }
};

std::vector<AdmissionStatus> AdmissionTable(const Instance& inst,
                                            const Matching& m);

// Condition 1 for (s, c). Throws InputError if the pair is in `m` or is not
// acceptable.
bool Admits(const Instance& inst, const Matching& m, CourseId c, StudentId s);

enum class VerifyMode {
  kAuto,        // dp without rules, exhaustive with rules
  kDp,          // subset-sum reachability over credits; no rules allowed
  kExhaustive,  // explicit (B, D) enumeration; checks rules
};

const char* ToString(VerifyMode mode);
std::optional<VerifyMode> ParseVerifyMode(std::string_view name);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kAuto;
  // Maximum (B, D) combinations examined per student in exhaustive mode.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
  // Largest credit limit the DP will index.
  Credits dp_credit_limit = Credits{1} << 26;
};

// All of these require a valid matching (CheckMatching empty) and throw
// InputError otherwise. CapabilityError signals dp mode with rules present or
// an exhausted enumeration budget.
std::optional<BlockingWitness> FindPairBlocking(const Instance& inst,
                                                const Matching& m);
std::optional<BlockingWitness> FindSizeBlocking(const Instance& inst,
                                                const Matching& m,
                                                const VerifyOptions& opts = {});
std::optional<BlockingWitness> FindCoalitionBlocking(
    const Instance& inst, const Matching& m, const VerifyOptions& opts = {});
std::optional<BlockingWitness> FindFirstCoalitionBlocking(
    const Instance& inst, const Matching& m, const VerifyOptions& opts = {});

std::optional<BlockingWitness> FindBlocking(const Instance& inst,
                                            const Matching& m,
                                            StabilityNotion notion,
                                            const VerifyOptions& opts = {});

struct VerifyResult {
  std::optional<BlockingWitness> witness;  // nullopt: stable

  bool stable() const { return !witness.has_value(); }
};

VerifyResult Verify(const Instance& inst, const Matching& m,
                    StabilityNotion notion, const VerifyOptions& opts = {});

// Re-checks a witness against the definition of its notion. Returns the
// first failed condition, or nullopt if the witness is genuine.
std::optional<std::string> ReplayWitness(const Instance& inst,
                                         const Matching& m,
                                         const BlockingWitness& w);

}  // namespace coursealloc

#endif  // COURSEALLOC_VERIFY_H_
