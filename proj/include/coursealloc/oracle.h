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

// Brute-force ground truth for tiny instances. Nothing here shares code with
// the fast verifiers beyond the data model; the definitions are applied
// literally over explicit subsets.

#ifndef COURSEALLOC_ORACLE_H_
#define COURSEALLOC_ORACLE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coursealloc/model.h"
#include "coursealloc/solve.h"
#include "coursealloc/verify.h"

namespace coursealloc {

struct OracleOptions {
  std::size_t max_pairs = 20;  // acceptable pairs enumerated as a bitmask
  // Per-student cap on (B, D) subset combinations.
  std::uint64_t witness_cap = std::uint64_t{1} << 22;
};

// Every feasible matching, in binary-counter order over the acceptable pairs
// listed by (student index, course index). Throws CapabilityError above the
// pair cap.
std::vector<Matching> EnumerateMatchings(const Instance& inst,
                                         const OracleOptions& opts = {});

// First witness in canonical order (see verify.h), found by enumerating
// every coalition and drop set for every student.
std::optional<BlockingWitness> BlockingWitnessBruteforce(
    const Instance& inst, const Matching& m, StabilityNotion notion,
    const OracleOptions& opts = {});

// Indexed by StabilityNotion.
template <typename T>
using PerNotion = std::array<T, 4>;

struct EnumerationReport {
  std::int64_t total_matchings = 0;  // matchings admissible under lq
  PerNotion<std::int64_t> stable_counts{};
  PerNotion<std::optional<Credits>> max_stable_size{};
  // Largest stable matching; ties go to the smallest pair list.
  PerNotion<std::optional<Matching>> best{};
  // Pair-stable matchings in enumeration order.
  std::vector<Matching> pair_stable;

  std::int64_t count(StabilityNotion n) const {
    return stable_counts[static_cast<int>(n)];
  }
  std::optional<Credits> max_size(StabilityNotion n) const {
    return max_stable_size[static_cast<int>(n)];
  }
};

// Filters every enumerated matching by the lower-quota rule and by each of
// the four notions. Under kClosures a course with a positive lower quota and
// no students is closed and removed before stability is judged.
EnumerationReport MaxStableBrute(const Instance& inst, LqMode lq = LqMode::kNone,
                                 const OracleOptions& opts = {});

}  // namespace coursealloc

#endif  // COURSEALLOC_ORACLE_H_
