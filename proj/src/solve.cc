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

#include "coursealloc/solve.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace coursealloc {
namespace {

void RequireValidInstance(const Instance& inst) {
  const auto problems = ValidateInstance(inst);
  if (!problems.empty()) {
    throw InputError("invalid instance: " + problems.front().message);
  }
}

bool FeasibleWith(const Instance& inst, StudentId s,
                  std::vector<CourseId> held, CourseId c) {
  if (!inst.HasRules()) return true;
  held.push_back(c);
  return IsFeasibleSet(inst, s, held);
}

Matching Collect(const std::vector<std::vector<CourseId>>& held) {
  std::vector<Pair> pairs;
  for (std::size_t s = 0; s < held.size(); ++s) {
    for (CourseId c : held[s]) pairs.emplace_back(StudentId(static_cast<int>(s)), c);
  }
  return Matching(std::move(pairs));
}

void Remove(std::vector<CourseId>& v, CourseId c) {
  v.erase(std::find(v.begin(), v.end(), c));
}

void Remove(std::vector<StudentId>& v, StudentId s) {
  v.erase(std::find(v.begin(), v.end(), s));
}

}  // namespace

RoundSchedule BuildRoundSchedule(const Instance& inst) {
  std::set<Credits, std::greater<>> values;
  for (const Course& c : inst.courses) values.insert(c.credits);
  RoundSchedule out;
  out.credits.assign(values.begin(), values.end());
  out.courses.resize(out.credits.size());
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    const auto it = std::find(out.credits.begin(), out.credits.end(),
                              inst.courses[c].credits);
    out.courses[it - out.credits.begin()].push_back(
        CourseId(static_cast<int>(c)));
  }
  return out;
}

Matching SolvePairSizeDa(const Instance& inst, DaTrace* trace) {
  RequireValidInstance(inst);
  const std::size_t n = inst.num_students();
  const std::size_t m = inst.num_courses();
  const PreferenceIndex ranks(inst);
  const RoundSchedule schedule = BuildRoundSchedule(inst);

  std::vector<std::vector<CourseId>> held(n);
  std::vector<std::vector<StudentId>> enrolled(m);
  std::vector<Credits> used(n, 0);
  std::int64_t applications = 0;
  std::vector<Matching> snapshots;

  for (const Credits round_credits : schedule.credits) {
    std::vector<std::vector<bool>> applied(n, std::vector<bool>(m, false));
    std::vector<bool> queued(n, true);
    std::deque<StudentId> queue;
    for (std::size_t s = 0; s < n; ++s) {
      queue.push_back(StudentId(static_cast<int>(s)));
    }
    auto enqueue = [&](StudentId s) {
      if (!queued[s.idx()]) {
        queued[s.idx()] = true;
        queue.push_back(s);
      }
    };

    while (!queue.empty()) {
      const StudentId s = queue.front();
      queue.pop_front();
      queued[s.idx()] = false;
      const Student& st = inst.student(s);
      if (used[s.idx()] + round_credits > st.credit_limit) continue;

      // Most-preferred course of this round not yet applied to. Courses
      // blocked by rules are left unmarked so a later rejection can reopen
      // them.
      std::optional<CourseId> target;
      for (CourseId c : st.prefs) {
        if (inst.course(c).credits != round_credits) continue;
        if (applied[s.idx()][c.idx()] || !ranks.Acceptable(s, c)) continue;
        if (!FeasibleWith(inst, s, held[s.idx()], c)) continue;
        target = c;
        break;
      }
      if (!target) continue;
      const CourseId c = *target;
      applied[s.idx()][c.idx()] = true;
      ++applications;

      auto& roster = enrolled[c.idx()];
      if (static_cast<std::int64_t>(roster.size()) <
          inst.course(c).upper_quota) {
        roster.push_back(s);
        held[s.idx()].push_back(c);
        used[s.idx()] += round_credits;
      } else if (!roster.empty()) {
        const StudentId worst = *std::max_element(
            roster.begin(), roster.end(), [&](StudentId a, StudentId b) {
              return ranks.CourseRank(c, a) < ranks.CourseRank(c, b);
            });
        if (ranks.CourseRank(c, s) < ranks.CourseRank(c, worst)) {
          Remove(roster, worst);
          Remove(held[worst.idx()], c);
          used[worst.idx()] -= round_credits;
          roster.push_back(s);
          held[s.idx()].push_back(c);
          used[s.idx()] += round_credits;
          enqueue(worst);
        }
      }
      enqueue(s);
    }
    snapshots.push_back(Collect(held));
  }

  Matching result = Collect(held);
  if (trace != nullptr) {
    trace->schedule = schedule;
    trace->after_round = std::move(snapshots);
    trace->applications = applications;
  }
  return result;
}

Matching SolveMasterList(const Instance& inst) {
  if (!inst.master_list_students) {
    throw InputError("master list required");
  }
  RequireValidInstance(inst);
  const PreferenceIndex ranks(inst);
  std::vector<std::vector<CourseId>> held(inst.num_students());
  std::vector<std::int64_t> enrolled(inst.num_courses(), 0);
  for (StudentId s : *inst.master_list_students) {
    const Student& st = inst.student(s);
    Credits used = 0;
    for (CourseId c : st.prefs) {
      if (used >= st.credit_limit) break;
      if (!ranks.Acceptable(s, c)) continue;
      const Course& co = inst.course(c);
      if (used + co.credits > st.credit_limit) continue;
      if (enrolled[c.idx()] >= co.upper_quota) continue;
      if (!FeasibleWith(inst, s, held[s.idx()], c)) continue;
      held[s.idx()].push_back(c);
      ++enrolled[c.idx()];
      used += co.credits;
    }
  }
  return Collect(held);
}

const char* ToString(LqMode mode) {
  switch (mode) {
    case LqMode::kNone:
      return "none";
    case LqMode::kNoClosures:
      return "nc";
    case LqMode::kClosures:
      return "cl";
  }
  return "unknown";
}

std::optional<LqMode> ParseLqMode(std::string_view name) {
  for (LqMode m : {LqMode::kNone, LqMode::kNoClosures, LqMode::kClosures}) {
    if (name == ToString(m)) return m;
  }
  return std::nullopt;
}

namespace {

class StableSearch {
 public:
  StableSearch(const Instance& inst, StabilityNotion notion, LqMode lq,
               const SearchOptions& opts)
      : inst_(inst),
        notion_(notion),
        lq_(lq),
        opts_(opts),
        held_(inst.num_students()),
        used_(inst.num_students(), 0),
        enrolled_(inst.num_courses(), 0) {
    const PreferenceIndex ranks(inst);
    for (std::size_t s = 0; s < inst.num_students(); ++s) {
      const StudentId sid(static_cast<int>(s));
      for (CourseId c : inst.students[s].prefs) {
        if (ranks.Acceptable(sid, c)) pairs_.emplace_back(sid, c);
      }
    }
    remaining_.assign(pairs_.size() + 1, 0);
    for (std::size_t i = pairs_.size(); i-- > 0;) {
      remaining_[i] = remaining_[i + 1] + inst.course(pairs_[i].second).credits;
    }
  }

  std::optional<StableSearchResult> Run() {
    Dfs(0, 0);
    return best_;
  }

 private:
  void Dfs(std::size_t i, Credits size) {
    if (++nodes_ > opts_.node_cap) {
      throw CapabilityError("stable search exceeded the node cap of " +
                            std::to_string(opts_.node_cap));
    }
    if (best_ && size + remaining_[i] < best_->size) return;
    if (i == pairs_.size()) {
      Leaf(size);
      return;
    }
    const auto [s, c] = pairs_[i];
    const Course& co = inst_.course(c);
    if (used_[s.idx()] + co.credits <= inst_.student(s).credit_limit &&
        enrolled_[c.idx()] < co.upper_quota &&
        FeasibleWith(inst_, s, held_[s.idx()], c)) {
      held_[s.idx()].push_back(c);
      used_[s.idx()] += co.credits;
      ++enrolled_[c.idx()];
      Dfs(i + 1, size + co.credits);
      --enrolled_[c.idx()];
      used_[s.idx()] -= co.credits;
      held_[s.idx()].pop_back();
    }
    Dfs(i + 1, size);
  }

  void Leaf(Credits size) {
    if (lq_ == LqMode::kNoClosures) {
      for (std::size_t c = 0; c < inst_.num_courses(); ++c) {
        if (enrolled_[c] < inst_.courses[c].lower_quota) return;
      }
    }
    Matching m = Collect(held_);
    if (best_ && size == best_->size && !(m < best_->matching)) return;
    if (!Verify(inst_, m, notion_, opts_.verify).stable()) return;
    best_ = StableSearchResult{std::move(m), size, {}};
  }

  const Instance& inst_;
  StabilityNotion notion_;
  LqMode lq_;
  const SearchOptions& opts_;
  std::vector<Pair> pairs_;
  std::vector<Credits> remaining_;
  std::vector<std::vector<CourseId>> held_;
  std::vector<Credits> used_;
  std::vector<std::int64_t> enrolled_;
  std::int64_t nodes_ = 0;
  std::optional<StableSearchResult> best_;
};

}  // namespace

std::optional<StableSearchResult> MaxStableSearch(const Instance& inst,
                                                  StabilityNotion notion,
                                                  LqMode lq,
                                                  const SearchOptions& opts) {
  if (lq == LqMode::kClosures) return LqClosuresMax(inst, notion, opts);
  RequireValidInstance(inst);
  return StableSearch(inst, notion, lq, opts).Run();
}

std::optional<Matching> LqNoClosuresMasterListPair(const Instance& inst) {
  Matching m = SolveMasterList(inst);
  if (!LowerQuotaDeficits(inst, m).empty()) return std::nullopt;
  return m;
}

std::optional<StableSearchResult> LqClosuresMax(const Instance& inst,
                                                StabilityNotion notion,
                                                const SearchOptions& opts) {
  RequireValidInstance(inst);
  std::vector<CourseId> gated;
  for (std::size_t c = 0; c < inst.num_courses(); ++c) {
    if (inst.courses[c].lower_quota > 0) {
      gated.push_back(CourseId(static_cast<int>(c)));
    }
  }
  if (gated.size() >= 62 ||
      (std::int64_t{1} << gated.size()) > opts.open_set_cap) {
    throw CapabilityError(std::to_string(gated.size()) +
                          " lower-quota courses exceed the open-set cap of " +
                          std::to_string(opts.open_set_cap));
  }
  std::optional<StableSearchResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gated.size());
       ++mask) {
    std::vector<bool> keep(inst.num_courses(), true);
    std::vector<CourseId> open;
    for (std::size_t i = 0; i < gated.size(); ++i) {
      if (mask >> i & 1) {
        open.push_back(gated[i]);
      } else {
        keep[gated[i].idx()] = false;
      }
    }
    const RestrictedInstance sub = RestrictCourses(inst, keep);
    const auto found =
        StableSearch(sub.instance, notion, LqMode::kNoClosures, opts).Run();
    if (!found) continue;
    std::vector<Pair> pairs;
    for (const auto& [s, c] : found->matching.pairs()) {
      pairs.emplace_back(s, sub.original[c.idx()]);
    }
    Matching m(std::move(pairs));
    if (!best || found->size > best->size ||
        (found->size == best->size && m < best->matching)) {
      best = StableSearchResult{std::move(m), found->size, std::move(open)};
    }
  }
  return best;
}

}  // namespace coursealloc
