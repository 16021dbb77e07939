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

#include "coursealloc/verify.h"

#include <algorithm>
#include <utility>

#include "subset_sum.h"

namespace coursealloc {
namespace {

using internal::SumSet;

// One course as seen from a single student: its rank on her list and its
// credits.
struct Item {
  int rank;
  CourseId course;
  Credits credits;
};

// Everything the per-student searches need.
struct StudentView {
  StudentId student;
  Credits used = 0;
  Credits limit = 0;
  std::vector<Item> candidates;  // admitting, unassigned; ascending rank
  std::vector<Item> assigned;    // C_M(s); ascending rank
};

std::vector<StudentView> BuildViews(const Instance& inst, const Matching& m,
                                    const PreferenceIndex& ranks) {
  const auto table = AdmissionTable(inst, m);
  const MatchingView mv(inst, m);
  std::vector<StudentView> out(inst.num_students());
  for (std::size_t si = 0; si < inst.num_students(); ++si) {
    const StudentId s(static_cast<int>(si));
    StudentView& v = out[si];
    v.student = s;
    v.used = mv.used[si];
    v.limit = inst.students[si].credit_limit;
    const auto& prefs = inst.students[si].prefs;
    for (std::size_t r = 0; r < prefs.size(); ++r) {
      const CourseId c = prefs[r];
      const Item item{static_cast<int>(r), c, inst.course(c).credits};
      if (m.Contains(s, c)) {
        v.assigned.push_back(item);
      } else if (ranks.Acceptable(s, c) && table[c.idx()].Admits(ranks, s)) {
        v.candidates.push_back(item);
      }
    }
  }
  return out;
}

void RequireValid(const Instance& inst, const Matching& m) {
  const auto problems = CheckMatching(inst, m);
  if (!problems.empty()) {
    throw InputError("not a valid matching: " + problems.front().message);
  }
}

std::vector<CourseId> Courses(const std::vector<Item>& items) {
  std::vector<CourseId> out;
  out.reserve(items.size());
  for (const Item& it : items) out.push_back(it.course);
  return out;
}

Credits Sum(const std::vector<Item>& items) {
  Credits total = 0;
  for (const Item& it : items) total += it.credits;
  return total;
}

// Items with rank strictly inside (lo, hi).
std::vector<Item> Between(const std::vector<Item>& items, int lo, int hi) {
  std::vector<Item> out;
  for (const Item& it : items) {
    if (it.rank > lo && it.rank < hi) out.push_back(it);
  }
  return out;
}

constexpr int kNoRank = 1 << 30;

// ---------------------------------------------------------------------------
// Credit-window DP.

class WindowSolver {
 public:
  WindowSolver(const StudentView& v, Credits dp_limit) : v_(v) {
    if (v.limit > dp_limit) {
      throw CapabilityError("credit limit " + std::to_string(v.limit) +
                            " exceeds the dp limit " +
                            std::to_string(dp_limit));
    }
  }

  Credits slack() const { return v_.limit - v_.used; }

  // Is there B' from b_pool and D from d_pool with b = base + O(B'),
  // d = O(D), d <= b <= d + slack?
  bool Feasible(Credits base, const std::vector<Item>& b_pool,
                const std::vector<Item>& d_pool) const {
    if (base > v_.limit) return false;
    SumSet sb(v_.limit - base);
    for (const Item& it : b_pool) sb.AddItem(it.credits);
    SumSet sd(v_.used);
    for (const Item& it : d_pool) sd.AddItem(it.credits);
    const auto count = sd.PrefixCounts();
    for (Credits x = 0; x <= sb.limit(); ++x) {
      if (!sb.Contains(x)) continue;
      const Credits b = base + x;
      const Credits lo = std::max<Credits>(0, b - slack());
      const Credits hi = std::min<Credits>(b, v_.used);
      if (lo > hi) continue;
      if (count[hi] - (lo > 0 ? count[lo - 1] : 0) > 0) return true;
    }
    return false;
  }

  // Lexicographically smallest D (by rank) from `pool` with
  // O(D) in [max(0, b - slack), b].
  std::vector<Item> SmallestDrop(Credits b,
                                 const std::vector<Item>& pool) const {
    const Credits lo = std::max<Credits>(0, b - slack());
    const Credits hi = std::min<Credits>(b, v_.used);
    std::vector<Item> out;
    if (lo == 0) return out;
    // suffix[i]: sums reachable with pool[i..].
    std::vector<SumSet> suffix(pool.size() + 1, SumSet(v_.used));
    for (std::size_t i = pool.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1];
      suffix[i].AddItem(pool[i].credits);
    }
    Credits cur = 0;
    std::size_t start = 0;
    while (cur < lo) {
      bool advanced = false;
      for (std::size_t i = start; i < pool.size(); ++i) {
        const Credits next = cur + pool[i].credits;
        bool ok = false;
        for (Credits x = std::max<Credits>(0, lo - next); next + x <= hi; ++x) {
          if (suffix[i + 1].Contains(x)) {
            ok = true;
            break;
          }
        }
        if (ok) {
          out.push_back(pool[i]);
          cur = next;
          start = i + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // unreachable when Feasible() held
    }
    return out;
  }

 private:
  const StudentView& v_;
};

std::vector<Item> AssignedBelow(const StudentView& v, int rank) {
  return Between(v.assigned, rank, kNoRank);
}

std::optional<BlockingWitness> DpPairSize(const StudentView& v,
                                          Credits dp_limit) {
  const WindowSolver w(v, dp_limit);
  for (const Item& c : v.candidates) {
    const auto pool = AssignedBelow(v, c.rank);
    if (w.Feasible(c.credits, {}, pool)) {
      return BlockingWitness{StabilityNotion::kPairSize, v.student,
                             {c.course},
                             Courses(w.SmallestDrop(c.credits, pool))};
    }
  }
  return std::nullopt;
}

std::optional<BlockingWitness> DpCoalition(const StudentView& v,
                                           Credits dp_limit) {
  const WindowSolver w(v, dp_limit);
  // Is P (ascending ranks) a complete coalition?
  auto complete = [&](const std::vector<Item>& p) {
    return w.Feasible(Sum(p), {}, AssignedBelow(v, p.back().rank));
  };
  // Can P be extended by higher-ranked candidates into a coalition?
  auto extendable = [&](const std::vector<Item>& p) {
    if (complete(p)) return true;
    const Credits base = Sum(p);
    const int last = p.back().rank;
    for (const Item& q : v.candidates) {
      if (q.rank <= last) continue;
      if (w.Feasible(base + q.credits, Between(v.candidates, last, q.rank),
                     AssignedBelow(v, q.rank))) {
        return true;
      }
    }
    return false;
  };
  std::vector<Item> p;
  while (p.empty() || !complete(p)) {
    const int last = p.empty() ? -1 : p.back().rank;
    bool grown = false;
    for (const Item& q : v.candidates) {
      if (q.rank <= last) continue;
      p.push_back(q);
      if (extendable(p)) {
        grown = true;
        break;
      }
      p.pop_back();
    }
    if (!grown) return std::nullopt;
  }
  const auto pool = AssignedBelow(v, p.back().rank);
  return BlockingWitness{StabilityNotion::kCoalition, v.student, Courses(p),
                         Courses(w.SmallestDrop(Sum(p), pool))};
}

std::optional<BlockingWitness> DpFirstCoalition(const StudentView& v,
                                                Credits dp_limit) {
  const WindowSolver w(v, dp_limit);
  auto complete = [&](const std::vector<Item>& p) {
    return w.Feasible(Sum(p), {}, AssignedBelow(v, p.front().rank));
  };
  auto extendable = [&](const std::vector<Item>& p) {
    return w.Feasible(Sum(p), Between(v.candidates, p.back().rank, kNoRank),
                      AssignedBelow(v, p.front().rank));
  };
  std::vector<Item> p;
  while (p.empty() || !complete(p)) {
    const int last = p.empty() ? -1 : p.back().rank;
    bool grown = false;
    for (const Item& q : v.candidates) {
      if (q.rank <= last) continue;
      p.push_back(q);
      if (extendable(p)) {
        grown = true;
        break;
      }
      p.pop_back();
    }
    if (!grown) return std::nullopt;
  }
  const auto pool = AssignedBelow(v, p.front().rank);
  return BlockingWitness{StabilityNotion::kFirstCoalition, v.student,
                         Courses(p), Courses(w.SmallestDrop(Sum(p), pool))};
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

std::vector<Item> Pick(const std::vector<Item>& items, std::uint64_t mask) {
  std::vector<Item> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask >> i & 1) out.push_back(items[i]);
  }
  return out;
}

bool RankVectorLess(const std::vector<Item>& a, const std::vector<Item>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Item& x, const Item& y) { return x.rank < y.rank; });
}

std::optional<BlockingWitness> Exhaustive(const Instance& inst,
                                          const StudentView& v,
                                          StabilityNotion notion,
                                          std::uint64_t cap) {
  const std::size_t k = v.candidates.size();
  const std::size_t h = v.assigned.size();
  const bool single = notion == StabilityNotion::kPairSize;
  if (h >= 63 || (!single && k >= 63)) {
    throw CapabilityError("exhaustive verification of student " +
                          inst.student(v.student).label +
                          " exceeds the enumeration cap");
  }
  const std::uint64_t b_count =
      single ? k : (std::uint64_t{1} << k) - (k > 0 ? 1 : 0);
  const std::uint64_t d_count = std::uint64_t{1} << h;
  if (b_count != 0 && d_count > cap / b_count) {
    throw CapabilityError("exhaustive verification of student " +
                          inst.student(v.student).label + " needs " +
                          std::to_string(b_count) + "x" +
                          std::to_string(d_count) +
                          " combinations, above the cap of " +
                          std::to_string(cap));
  }

  std::optional<std::pair<std::vector<Item>, std::vector<Item>>> best;
  auto consider = [&](std::vector<Item> b, std::vector<Item> d) {
    const Credits ob = Sum(b), od = Sum(d);
    if (ob < od || v.used - od + ob > v.limit) return;
    // Preference condition.
    if (!d.empty()) {
      const int d_best = d.front().rank;
      const int bound = notion == StabilityNotion::kFirstCoalition
                            ? b.front().rank
                            : b.back().rank;
      if (d_best <= bound) return;
    }
    if (inst.HasRules()) {
      std::vector<CourseId> after;
      for (const Item& it : v.assigned) {
        if (std::none_of(d.begin(), d.end(), [&](const Item& x) {
              return x.course == it.course;
            })) {
          after.push_back(it.course);
        }
      }
      for (const Item& it : b) after.push_back(it.course);
      if (!IsFeasibleSet(inst, v.student, after)) return;
    }
    if (!best || RankVectorLess(b, best->first) ||
        (!RankVectorLess(best->first, b) && RankVectorLess(d, best->second))) {
      best.emplace(std::move(b), std::move(d));
    }
  };

  if (single) {
    for (const Item& c : v.candidates) {
      for (std::uint64_t dm = 0; dm < d_count; ++dm) {
        consider({c}, Pick(v.assigned, dm));
      }
    }
  } else {
    for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << k); ++bm) {
      for (std::uint64_t dm = 0; dm < d_count; ++dm) {
        consider(Pick(v.candidates, bm), Pick(v.assigned, dm));
      }
    }
  }
  if (!best) return std::nullopt;
  return BlockingWitness{notion, v.student, Courses(best->first),
                         Courses(best->second)};
}

VerifyMode Resolve(const Instance& inst, VerifyMode mode) {
  if (mode == VerifyMode::kAuto) {
    return inst.HasRules() ? VerifyMode::kExhaustive : VerifyMode::kDp;
  }
  if (mode == VerifyMode::kDp && inst.HasRules()) {
    throw CapabilityError(
        "dp verification cannot handle enrolment rules; use exhaustive mode");
  }
  return mode;
}

std::optional<BlockingWitness> FindCreditWindow(const Instance& inst,
                                                const Matching& m,
                                                StabilityNotion notion,
                                                const VerifyOptions& opts) {
  RequireValid(inst, m);
  const VerifyMode mode = Resolve(inst, opts.mode);
  const PreferenceIndex ranks(inst);
  for (const StudentView& v : BuildViews(inst, m, ranks)) {
    if (v.candidates.empty()) continue;
    std::optional<BlockingWitness> w;
    if (mode == VerifyMode::kExhaustive) {
      w = Exhaustive(inst, v, notion, opts.exhaustive_cap);
    } else if (notion == StabilityNotion::kPairSize) {
      w = DpPairSize(v, opts.dp_credit_limit);
    } else if (notion == StabilityNotion::kCoalition) {
      w = DpCoalition(v, opts.dp_credit_limit);
    } else {
      w = DpFirstCoalition(v, opts.dp_credit_limit);
    }
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

const char* ToString(StabilityNotion notion) {
  switch (notion) {
    case StabilityNotion::kPair:
      return "pair";
    case StabilityNotion::kPairSize:
      return "pair-size";
    case StabilityNotion::kCoalition:
      return "coalition";
    case StabilityNotion::kFirstCoalition:
      return "first-coalition";
  }
  return "unknown";
}

std::optional<StabilityNotion> ParseNotion(std::string_view name) {
  for (StabilityNotion n : kAllNotions) {
    if (name == ToString(n)) return n;
  }
  return std::nullopt;
}

const char* ToString(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kAuto:
      return "auto";
    case VerifyMode::kDp:
      return "dp";
    case VerifyMode::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::optional<VerifyMode> ParseVerifyMode(std::string_view name) {
  for (VerifyMode m :
       {VerifyMode::kAuto, VerifyMode::kDp, VerifyMode::kExhaustive}) {
    if (name == ToString(m)) return m;
  }
  return std::nullopt;
}

std::vector<AdmissionStatus> AdmissionTable(const Instance& inst,
                                            const Matching& m) {
  const PreferenceIndex ranks(inst);
  const MatchingView mv(inst, m);
  std::vector<AdmissionStatus> out(inst.num_courses());
  for (std::size_t ci = 0; ci < inst.num_courses(); ++ci) {
    AdmissionStatus& a = out[ci];
    a.course = CourseId(static_cast<int>(ci));
    const auto& enrolled = mv.students_of[ci];
    a.undersubscribed = static_cast<std::int64_t>(enrolled.size()) <
                        inst.courses[ci].upper_quota;
    for (StudentId s : enrolled) {
      const int r = ranks.CourseRank(a.course, s);
      if (r > a.worst_rank) {
        a.worst_rank = r;
        a.worst_assigned = s;
      }
    }
  }
  return out;
}

bool Admits(const Instance& inst, const Matching& m, CourseId c,
            StudentId s) {
  if (s.value < 0 || s.idx() >= inst.num_students() || c.value < 0 ||
      c.idx() >= inst.num_courses()) {
    throw InputError("unknown student or course id");
  }
  const PreferenceIndex ranks(inst);
  if (!ranks.Acceptable(s, c)) {
    throw InputError("(" + inst.student(s).label + "," + inst.course(c).label +
                     ") is not an acceptable pair");
  }
  if (m.Contains(s, c)) {
    throw InputError("(" + inst.student(s).label + "," + inst.course(c).label +
                     ") is already in the matching");
  }
  return AdmissionTable(inst, m)[c.idx()].Admits(ranks, s);
}

std::optional<BlockingWitness> FindPairBlocking(const Instance& inst,
                                                const Matching& m) {
  RequireValid(inst, m);
  const PreferenceIndex ranks(inst);
  for (const StudentView& v : BuildViews(inst, m, ranks)) {
    for (const Item& c : v.candidates) {
      // Drop everything ranked below c: removing more never hurts credits
      // and keeps the remaining set downward-feasible.
      std::vector<Item> drop = AssignedBelow(v, c.rank);
      if (v.used - Sum(drop) + c.credits > v.limit) continue;
      if (inst.HasRules()) {
        std::vector<CourseId> after;
        for (const Item& it : v.assigned) {
          if (it.rank < c.rank) after.push_back(it.course);
        }
        after.push_back(c.course);
        if (!IsFeasibleSet(inst, v.student, after)) continue;
      }
      return BlockingWitness{StabilityNotion::kPair, v.student, {c.course},
                             Courses(drop)};
    }
  }
  return std::nullopt;
}

std::optional<BlockingWitness> FindSizeBlocking(const Instance& inst,
                                                const Matching& m,
                                                const VerifyOptions& opts) {
  return FindCreditWindow(inst, m, StabilityNotion::kPairSize, opts);
}

std::optional<BlockingWitness> FindCoalitionBlocking(
    const Instance& inst, const Matching& m, const VerifyOptions& opts) {
  return FindCreditWindow(inst, m, StabilityNotion::kCoalition, opts);
}

std::optional<BlockingWitness> FindFirstCoalitionBlocking(
    const Instance& inst, const Matching& m, const VerifyOptions& opts) {
  return FindCreditWindow(inst, m, StabilityNotion::kFirstCoalition, opts);
}

std::optional<BlockingWitness> FindBlocking(const Instance& inst,
                                            const Matching& m,
                                            StabilityNotion notion,
                                            const VerifyOptions& opts) {
  if (notion == StabilityNotion::kPair) return FindPairBlocking(inst, m);
  return FindCreditWindow(inst, m, notion, opts);
}

VerifyResult Verify(const Instance& inst, const Matching& m,
                    StabilityNotion notion, const VerifyOptions& opts) {
  return VerifyResult{FindBlocking(inst, m, notion, opts)};
}

std::optional<std::string> ReplayWitness(const Instance& inst,
                                         const Matching& m,
                                         const BlockingWitness& w) {
  const StudentId s = w.student;
  if (s.value < 0 || s.idx() >= inst.num_students()) {
    return "unknown student";
  }
  if (w.coalition.empty()) return "empty coalition";
  const bool single = w.notion == StabilityNotion::kPair ||
                      w.notion == StabilityNotion::kPairSize;
  if (single && w.coalition.size() != 1) {
    return "pair notions need a single course";
  }
  const PreferenceIndex ranks(inst);
  const auto table = AdmissionTable(inst, m);
  for (CourseId c : w.coalition) {
    if (c.value < 0 || c.idx() >= inst.num_courses()) return "unknown course";
    if (!ranks.Acceptable(s, c)) return "unacceptable pair";
    if (m.Contains(s, c)) return "course already assigned";
    if (!table[c.idx()].Admits(ranks, s)) {
      return "condition 1 fails at " + inst.course(c).label;
    }
  }
  const auto held = m.CoursesOf(s);
  for (CourseId d : w.drop_set) {
    if (std::find(held.begin(), held.end(), d) == held.end()) {
      return "drop set is not a subset of the assigned courses";
    }
  }
  auto rank = [&](CourseId c) { return ranks.StudentRank(s, c); };
  int best_b = kNoRank, worst_b = -1, best_d = kNoRank;
  for (CourseId c : w.coalition) {
    best_b = std::min(best_b, rank(c));
    worst_b = std::max(worst_b, rank(c));
  }
  for (CourseId d : w.drop_set) best_d = std::min(best_d, rank(d));
  const bool first = w.notion == StabilityNotion::kFirstCoalition;
  if (!w.drop_set.empty() && best_d <= (first ? best_b : worst_b)) {
    return "condition 2 fails: preference over the drop set";
  }
  const Credits used = inst.TotalCredits(held);
  const Credits ob = inst.TotalCredits(w.coalition);
  const Credits od = inst.TotalCredits(w.drop_set);
  if (used - od + ob > inst.student(s).credit_limit) {
    return "condition 2 fails: credit limit";
  }
  if (w.notion != StabilityNotion::kPair && ob < od) {
    return "condition 2 fails: drops more credits than it gains";
  }
  std::vector<CourseId> after;
  for (CourseId c : held) {
    if (std::find(w.drop_set.begin(), w.drop_set.end(), c) ==
        w.drop_set.end()) {
      after.push_back(c);
    }
  }
  after.insert(after.end(), w.coalition.begin(), w.coalition.end());
  if (!IsFeasibleSet(inst, s, after)) {
    return "condition 3 fails: enrolment rules";
  }
  return std::nullopt;
}

}  // namespace coursealloc
