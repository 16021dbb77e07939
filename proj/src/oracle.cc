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

#include "coursealloc/oracle.h"

#include <algorithm>

namespace coursealloc {
namespace {

int IndexIn(const std::vector<CourseId>& list, CourseId c) {
  const auto it = std::find(list.begin(), list.end(), c);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

int IndexIn(const std::vector<StudentId>& list, StudentId s) {
  const auto it = std::find(list.begin(), list.end(), s);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

bool MutuallyListed(const Instance& inst, StudentId s, CourseId c) {
  return IndexIn(inst.student(s).prefs, c) >= 0 &&
         IndexIn(inst.course(c).prefs, s) >= 0;
}

// Condition 1, read straight off the definition.
bool CourseWouldTake(const Instance& inst, const Matching& m, CourseId c,
                     StudentId s) {
  const auto roster = m.StudentsOf(c);
  if (static_cast<std::int64_t>(roster.size()) < inst.course(c).upper_quota) {
    return true;
  }
  const auto& prefs = inst.course(c).prefs;
  for (StudentId k : roster) {
    if (IndexIn(prefs, s) < IndexIn(prefs, k)) return true;
  }
  return false;
}

bool IsMatchingLiteral(const Instance& inst, const Matching& m) {
  for (std::size_t s = 0; s < inst.num_students(); ++s) {
    const StudentId sid(static_cast<int>(s));
    const auto held = m.CoursesOf(sid);
    Credits total = 0;
    for (CourseId c : held) total += inst.course(c).credits;
    if (total > inst.students[s].credit_limit) return false;
    for (const FeasibilityRule& rule : inst.rules) {
      if (rule.AppliesTo(sid) && !rule.Allows(held)) return false;
    }
  }
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    const CourseId cid(static_cast<int>(c));
    if (static_cast<std::int64_t>(m.StudentsOf(cid).size()) >
        inst.courses[c].upper_quota) {
      return false;
    }
  }
  return true;
}

std::vector<int> SortedRanks(const std::vector<CourseId>& prefs,
                             const std::vector<CourseId>& set) {
  std::vector<int> out;
  for (CourseId c : set) out.push_back(IndexIn(prefs, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CourseId> ByRank(const std::vector<CourseId>& prefs,
                             std::vector<CourseId> set) {
  std::sort(set.begin(), set.end(), [&](CourseId a, CourseId b) {
    return IndexIn(prefs, a) < IndexIn(prefs, b);
  });
  return set;
}

// Candidate triple for one student; ranks are kept for ordering.
struct Candidate {
  std::vector<int> b_ranks;
  std::vector<int> d_ranks;
  std::vector<CourseId> b;
  std::vector<CourseId> d;
};

std::optional<BlockingWitness> BruteForStudent(const Instance& inst,
                                               const Matching& m, StudentId s,
                                               StabilityNotion notion,
                                               const OracleOptions& opts) {
  const Student& st = inst.student(s);
  const auto& list = st.prefs;
  const auto held = m.CoursesOf(s);
  const std::size_t k = list.size();
  const std::size_t h = held.size();
  if (k >= 40 || h >= 40 ||
      (std::uint64_t{1} << (k + h)) > opts.witness_cap) {
    throw CapabilityError("oracle witness search for " + st.label + " needs 2^" +
                          std::to_string(k + h) +
                          " subsets, above the cap of " +
                          std::to_string(opts.witness_cap));
  }
  Credits used = 0;
  for (CourseId c : held) used += inst.course(c).credits;

  std::optional<Candidate> best;
  for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << k); ++bm) {
    std::vector<CourseId> b;
    for (std::size_t i = 0; i < k; ++i) {
      if (bm >> i & 1) b.push_back(list[i]);
    }
    const bool single = notion == StabilityNotion::kPair ||
                        notion == StabilityNotion::kPairSize;
    if (single && b.size() != 1) continue;
    bool ok = true;
    for (CourseId c : b) {
      if (!MutuallyListed(inst, s, c) || m.Contains(s, c) ||
          !CourseWouldTake(inst, m, c, s)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Credits ob = 0;
    for (CourseId c : b) ob += inst.course(c).credits;

    std::optional<std::vector<CourseId>> chosen_d;
    for (std::uint64_t dm = 0; dm < (std::uint64_t{1} << h); ++dm) {
      std::vector<CourseId> d, after;
      for (std::size_t i = 0; i < h; ++i) {
        (dm >> i & 1 ? d : after).push_back(held[i]);
      }
      Credits od = 0;
      for (CourseId c : d) od += inst.course(c).credits;
      // Preference clause.
      bool prefers = true;
      for (CourseId x : d) {
        if (notion == StabilityNotion::kFirstCoalition) {
          int best_b = 1 << 30;
          for (CourseId c : b) best_b = std::min(best_b, IndexIn(list, c));
          if (!(best_b < IndexIn(list, x))) prefers = false;
        } else {
          for (CourseId c : b) {
            if (!(IndexIn(list, c) < IndexIn(list, x))) prefers = false;
          }
        }
      }
      if (!prefers) continue;
      if (used - od + ob > st.credit_limit) continue;
      if (notion != StabilityNotion::kPair && ob < od) continue;
      after.insert(after.end(), b.begin(), b.end());
      bool feasible = true;
      for (const FeasibilityRule& rule : inst.rules) {
        if (rule.AppliesTo(s) && !rule.Allows(after)) feasible = false;
      }
      if (!feasible) continue;
      if (!chosen_d) {
        chosen_d = d;
        continue;
      }
      if (notion == StabilityNotion::kPair) {
        // Keep the largest drop set; valid ones are closed under union here.
        if (d.size() > chosen_d->size()) chosen_d = d;
      } else if (SortedRanks(list, d) < SortedRanks(list, *chosen_d)) {
        chosen_d = d;
      }
    }
    if (!chosen_d) continue;
    Candidate cand{SortedRanks(list, b), SortedRanks(list, *chosen_d),
                   ByRank(list, b), ByRank(list, *chosen_d)};
    if (!best || cand.b_ranks < best->b_ranks) best = std::move(cand);
  }
  if (!best) return std::nullopt;
  return BlockingWitness{notion, s, best->b, best->d};
}

bool LqAdmissible(const Instance& inst, const Matching& m, LqMode lq) {
  if (lq == LqMode::kNone) return true;
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    const auto n = static_cast<std::int64_t>(
        m.StudentsOf(CourseId(static_cast<int>(c))).size());
    const std::int64_t lower = inst.courses[c].lower_quota;
    if (n >= lower) continue;
    if (lq == LqMode::kClosures && n == 0) continue;
    return false;
  }
  return true;
}

}  // namespace

std::vector<Matching> EnumerateMatchings(const Instance& inst,
                                         const OracleOptions& opts) {
  std::vector<Pair> acceptable;
  for (std::size_t s = 0; s < inst.num_students(); ++s) {
    for (std::size_t c = 0; c < inst.num_courses(); ++c) {
      const StudentId sid(static_cast<int>(s));
      const CourseId cid(static_cast<int>(c));
      if (MutuallyListed(inst, sid, cid)) acceptable.emplace_back(sid, cid);
    }
  }
  if (acceptable.size() > opts.max_pairs) {
    throw CapabilityError("oracle enumeration over " +
                          std::to_string(acceptable.size()) +
                          " acceptable pairs exceeds the cap of " +
                          std::to_string(opts.max_pairs));
  }
  std::vector<Matching> out;
  const std::uint64_t total = std::uint64_t{1} << acceptable.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < acceptable.size(); ++i) {
      if (mask >> i & 1) pairs.push_back(acceptable[i]);
    }
    Matching m(std::move(pairs));
    if (IsMatchingLiteral(inst, m)) out.push_back(std::move(m));
  }
  return out;
}

std::optional<BlockingWitness> BlockingWitnessBruteforce(
    const Instance& inst, const Matching& m, StabilityNotion notion,
    const OracleOptions& opts) {
  for (std::size_t s = 0; s < inst.num_students(); ++s) {
    auto w =
        BruteForStudent(inst, m, StudentId(static_cast<int>(s)), notion, opts);
    if (w) return w;
  }
  return std::nullopt;
}

EnumerationReport MaxStableBrute(const Instance& inst, LqMode lq,
                                 const OracleOptions& opts) {
  EnumerationReport report;
  for (const Matching& m : EnumerateMatchings(inst, opts)) {
    if (!LqAdmissible(inst, m, lq)) continue;
    ++report.total_matchings;

    // Under closures, judge stability in the instance of open courses.
    const Instance* judged = &inst;
    Matching judged_m = m;
    RestrictedInstance sub;
    if (lq == LqMode::kClosures) {
      std::vector<bool> keep(inst.num_courses(), true);
      for (std::size_t c = 0; c < inst.num_courses(); ++c) {
        if (inst.courses[c].lower_quota > 0 &&
            m.StudentsOf(CourseId(static_cast<int>(c))).empty()) {
          keep[c] = false;
        }
      }
      sub = RestrictCourses(inst, keep);
      std::vector<Pair> pairs;
      for (const auto& [s, c] : m.pairs()) {
        pairs.emplace_back(s, *sub.mapped[c.idx()]);
      }
      judged = &sub.instance;
      judged_m = Matching(std::move(pairs));
    }

    Credits size = 0;
    for (const auto& [s, c] : m.pairs()) size += inst.course(c).credits;
    for (StabilityNotion n : kAllNotions) {
      if (BlockingWitnessBruteforce(*judged, judged_m, n, opts)) continue;
      const int i = static_cast<int>(n);
      ++report.stable_counts[i];
      if (n == StabilityNotion::kPair) report.pair_stable.push_back(m);
      if (!report.max_stable_size[i] || size > *report.max_stable_size[i]) {
        report.max_stable_size[i] = size;
        report.best[i] = m;
      } else if (size == *report.max_stable_size[i] && m < *report.best[i]) {
        report.best[i] = m;
      }
    }
  }
  return report;
}

}  // namespace coursealloc
