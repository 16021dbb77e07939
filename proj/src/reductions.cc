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

#include "coursealloc/reductions.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace coursealloc {
namespace {

// Label-addressed instance assembly.
class Builder {
 public:
  StudentId Student(const std::string& label, Credits limit) {
    const StudentId id(static_cast<int>(inst_.students.size()));
    inst_.students.push_back({label, limit, {}});
    students_[label] = id;
    return id;
  }

  CourseId Course(const std::string& label, Credits credits, int upper,
                  int lower = 0) {
    const CourseId id(static_cast<int>(inst_.courses.size()));
    inst_.courses.push_back({label, credits, upper, lower, {}});
    courses_[label] = id;
    return id;
  }

  StudentId S(const std::string& label) const { return students_.at(label); }
  CourseId C(const std::string& label) const { return courses_.at(label); }

  void StudentPrefs(const std::string& s, const std::vector<std::string>& cs) {
    auto& prefs = inst_.students[S(s).idx()].prefs;
    prefs.clear();
    for (const auto& c : cs) prefs.push_back(C(c));
  }

  void CoursePrefs(const std::string& c, const std::vector<std::string>& ss) {
    auto& prefs = inst_.courses[C(c).idx()].prefs;
    prefs.clear();
    for (const auto& s : ss) prefs.push_back(S(s));
  }

  void StudentMasterList(const std::vector<std::string>& ss) {
    std::vector<StudentId> ml;
    for (const auto& s : ss) ml.push_back(S(s));
    inst_.master_list_students = std::move(ml);
  }

  void CourseMasterList(const std::vector<std::string>& cs) {
    std::vector<CourseId> ml;
    for (const auto& c : cs) ml.push_back(C(c));
    inst_.master_list_courses = std::move(ml);
  }

  // Course lists follow the student master list over the students that list
  // the course.
  void CoursePrefsFromMasterList() {
    for (auto& c : inst_.courses) c.prefs.clear();
    for (StudentId s : *inst_.master_list_students) {
      for (CourseId c : inst_.student(s).prefs) {
        inst_.courses[c.idx()].prefs.push_back(s);
      }
    }
  }

  Matching Pairs(const std::vector<std::pair<std::string, std::string>>& ps)
      const {
    std::vector<Pair> out;
    for (const auto& [s, c] : ps) out.emplace_back(S(s), C(c));
    return Matching(std::move(out));
  }

  Instance Take() { return std::move(inst_); }
  const Instance& instance() const { return inst_; }

 private:
  Instance inst_;
  std::unordered_map<std::string, StudentId> students_;
  std::unordered_map<std::string, CourseId> courses_;
};

std::string Num(const char* prefix, int i) {
  return prefix + std::to_string(i);
}

std::string Sub(const char* prefix, int i, int r) {
  return prefix + std::to_string(i) + "_" + std::to_string(r);
}

// Neighbours (j < k) of every w in a degree-2 graph.
std::vector<std::pair<int, int>> Neighbours(const GraphInput& g) {
  if (g.left < 0 || g.right < 0) throw InputError("negative vertex count");
  std::vector<std::vector<int>> adj(g.right);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, w] : g.edges) {
    if (u < 0 || u >= g.left || w < 0 || w >= g.right) {
      throw InputError("edge (" + std::to_string(u + 1) + "," +
                       std::to_string(w + 1) + ") is out of range");
    }
    if (!seen.insert({u, w}).second) {
      throw InputError("duplicate edge (u" + std::to_string(u + 1) + ",w" +
                       std::to_string(w + 1) + ")");
    }
    adj[w].push_back(u);
  }
  std::vector<std::pair<int, int>> out(g.right);
  for (int w = 0; w < g.right; ++w) {
    if (adj[w].size() != 2) {
      throw InputError("vertex w" + std::to_string(w + 1) + " has degree " +
                       std::to_string(adj[w].size()) + ", expected 2");
    }
    out[w] = {std::min(adj[w][0], adj[w][1]), std::max(adj[w][0], adj[w][1])};
  }
  return out;
}

// Checks that `edges` is a maximal matching of size exactly K; returns the
// partner of every w (-1 if unmatched).
std::vector<int> CheckForwardMatching(
    const GraphInput& g, const std::vector<std::pair<int, int>>& edges) {
  const auto nb = Neighbours(g);
  std::vector<int> mate_w(g.right, -1), mate_u(g.left, -1);
  for (const auto& [u, w] : edges) {
    if (u < 0 || u >= g.left || w < 0 || w >= g.right ||
        (nb[w].first != u && nb[w].second != u)) {
      throw InputError("matching uses a non-edge");
    }
    if (mate_w[w] >= 0 || mate_u[u] >= 0) {
      throw InputError("graph matching reuses a vertex");
    }
    mate_w[w] = u;
    mate_u[u] = w;
  }
  for (int w = 0; w < g.right; ++w) {
    if (mate_w[w] >= 0) continue;
    if (mate_u[nb[w].first] < 0 || mate_u[nb[w].second] < 0) {
      throw InputError("graph matching is not maximal");
    }
  }
  if (static_cast<int>(edges.size()) != g.k) {
    throw InputError("the construction needs a maximal matching of size K=" +
                     std::to_string(g.k) + ", got " +
                     std::to_string(edges.size()));
  }
  return mate_w;
}

// Which of s_i^1 / s_i^2 lists c_j: the first for the lower neighbour.
int Side(const std::pair<int, int>& nb, int u) { return u == nb.first ? 1 : 2; }

}  // namespace

// ---- subset sum -----------------------------------------------------------

Fixture GadgetSubsetSum(const SubsetSumInput& x) {
  if (x.sizes.empty()) throw InputError("subset-sum input has no elements");
  if (x.target < 1) throw InputError("subset-sum target must be positive");
  for (Credits v : x.sizes) {
    if (v < 1) throw InputError("subset-sum sizes must be positive");
  }
  Builder b;
  const Credits total = std::accumulate(x.sizes.begin(), x.sizes.end(),
                                        Credits{0});
  b.Student("s", total);
  b.Course("b", x.target, 1);
  std::vector<std::string> prefs = {"b"};
  std::vector<std::pair<std::string, std::string>> held;
  for (std::size_t i = 0; i < x.sizes.size(); ++i) {
    const std::string label = Num("e", static_cast<int>(i) + 1);
    b.Course(label, x.sizes[i], 1);
    prefs.push_back(label);
    held.emplace_back("s", label);
  }
  b.StudentPrefs("s", prefs);
  for (const auto& c : prefs) b.CoursePrefs(c, {"s"});
  Matching m = b.Pairs(held);
  return Fixture{b.Take(), std::move(m)};
}

// ---- hospitals / residents -------------------------------------------------

Instance ReduceHrs(const HrsInput& in, HrsMode mode) {
  const int nh = static_cast<int>(in.hospitals.size());
  const int nr = static_cast<int>(in.residents.size());
  for (const auto& r : in.residents) {
    if (r.size != 1 && r.size != 2) {
      throw InputError("resident " + r.label + " must have size 1 or 2");
    }
    if (r.prefs.size() > 3) {
      throw InputError("resident " + r.label + " lists more than 3 hospitals");
    }
    for (int h : r.prefs) {
      if (h < 0 || h >= nh) throw InputError("resident lists unknown hospital");
    }
  }
  for (const auto& h : in.hospitals) {
    if (mode == HrsMode::kPair && (h.quota < 0 || h.quota > 2)) {
      throw InputError("hospital " + h.label + " must have quota at most 2");
    }
    if (mode == HrsMode::kFirstCoalition && h.quota != 2) {
      throw InputError("hospital " + h.label + " must have quota 2");
    }
    if (h.prefs.size() > 3) {
      throw InputError("hospital " + h.label + " lists more than 3 residents");
    }
    for (int r : h.prefs) {
      if (r < 0 || r >= nr) throw InputError("hospital lists unknown resident");
    }
  }
  Builder b;
  for (int i = 0; i < nh; ++i) b.Student(Num("s", i + 1), in.hospitals[i].quota);
  for (int j = 0; j < nr; ++j) {
    b.Course(Num("c", j + 1), in.residents[j].size, 1);
  }
  if (mode == HrsMode::kFirstCoalition) {
    for (int i = 0; i < nh; ++i) b.Course(Num("d", i + 1), 1, 1);
  }
  for (int i = 0; i < nh; ++i) {
    std::vector<std::string> prefs;
    for (int r : in.hospitals[i].prefs) prefs.push_back(Num("c", r + 1));
    if (mode == HrsMode::kFirstCoalition) {
      prefs.push_back(Num("d", i + 1));
      b.CoursePrefs(Num("d", i + 1), {Num("s", i + 1)});
    }
    b.StudentPrefs(Num("s", i + 1), prefs);
  }
  for (int j = 0; j < nr; ++j) {
    std::vector<std::string> prefs;
    for (int h : in.residents[j].prefs) prefs.push_back(Num("s", h + 1));
    b.CoursePrefs(Num("c", j + 1), prefs);
  }
  return b.Take();
}

Matching HrsMatchingToCa(const HrsInput& in, HrsMode mode,
                         const std::vector<std::pair<int, int>>& rh) {
  const Instance inst = ReduceHrs(in, mode);
  std::vector<Pair> pairs;
  std::vector<Credits> used(in.hospitals.size(), 0);
  for (const auto& [r, h] : rh) {
    pairs.emplace_back(StudentId(h), CourseId(r));
    used[h] += in.residents[r].size;
  }
  if (mode == HrsMode::kFirstCoalition) {
    for (std::size_t h = 0; h < in.hospitals.size(); ++h) {
      if (used[h] < 2) {
        pairs.emplace_back(StudentId(static_cast<int>(h)),
                           *inst.FindCourse(Num("d", static_cast<int>(h) + 1)));
      }
    }
  }
  return Matching(std::move(pairs));
}

// ---- stable marriage with ties ---------------------------------------------

namespace {

struct SmtiShape {
  std::vector<int> group_of;     // woman -> tie group index
  std::vector<int> position;     // woman -> flattened master-list position
  std::vector<int> partner;      // woman -> tied partner or -1
  std::vector<bool> first_in_tie;
};

SmtiShape CheckSmti(const SmtiInput& in) {
  const int nm = static_cast<int>(in.men.size());
  const int nw = static_cast<int>(in.women.size());
  SmtiShape shape;
  shape.group_of.assign(nw, -1);
  shape.position.assign(nw, -1);
  shape.partner.assign(nw, -1);
  shape.first_in_tie.assign(nw, false);
  int pos = 0;
  for (std::size_t g = 0; g < in.master_list_women.size(); ++g) {
    const auto& group = in.master_list_women[g];
    if (group.empty() || group.size() > 2) {
      throw InputError("ties in the women's master list must have length 1 or 2");
    }
    for (int w : group) {
      if (w < 0 || w >= nw || shape.group_of[w] >= 0) {
        throw InputError("women's master list must list every woman once");
      }
      shape.group_of[w] = static_cast<int>(g);
      shape.position[w] = pos++;
    }
    if (group.size() == 2) {
      shape.partner[group[0]] = group[1];
      shape.partner[group[1]] = group[0];
      shape.first_in_tie[group[0]] = true;
    }
  }
  if (pos != nw) throw InputError("women's master list must list every woman");
  std::vector<int> man_pos(nm, -1);
  if (static_cast<int>(in.master_list_men.size()) != nm) {
    throw InputError("men's master list must list every man");
  }
  for (int i = 0; i < nm; ++i) {
    const int m = in.master_list_men[i];
    if (m < 0 || m >= nm || man_pos[m] >= 0) {
      throw InputError("men's master list must list every man once");
    }
    man_pos[m] = i;
  }
  for (int m = 0; m < nm; ++m) {
    const auto& p = in.men[m].prefs;
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (p[r] < 0 || p[r] >= nw) throw InputError("man lists unknown woman");
      if (r > 0 && shape.group_of[p[r - 1]] > shape.group_of[p[r]]) {
        throw InputError("man " + in.men[m].label +
                         " disagrees with the women's master list");
      }
      const auto& back = in.women[p[r]].prefs;
      if (std::find(back.begin(), back.end(), m) == back.end()) {
        throw InputError("acceptability must be mutual");
      }
    }
  }
  for (int w = 0; w < nw; ++w) {
    const auto& p = in.women[w].prefs;
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (p[r] < 0 || p[r] >= nm) throw InputError("woman lists unknown man");
      if (r > 0 && man_pos[p[r - 1]] > man_pos[p[r]]) {
        throw InputError("woman " + in.women[w].label +
                         " disagrees with the men's master list");
      }
      const auto& back = in.men[p[r]].prefs;
      if (std::find(back.begin(), back.end(), w) == back.end()) {
        throw InputError("acceptability must be mutual");
      }
    }
  }
  return shape;
}

}  // namespace

Instance ReduceSmtiCoalition(const SmtiInput& in) {
  const SmtiShape shape = CheckSmti(in);
  const int nm = static_cast<int>(in.men.size());
  const int nw = static_cast<int>(in.women.size());
  auto one_credit = [&](int w) {
    return shape.partner[w] >= 0 && shape.first_in_tie[w];
  };
  auto companion = [](int w) { return "c" + std::to_string(w + 1) + "p"; };

  Builder b;
  for (int m = 0; m < nm; ++m) b.Student(Num("s", m + 1), 2);
  for (int w = 0; w < nw; ++w) b.Course(Num("c", w + 1), one_credit(w) ? 1 : 2, 1);
  for (int w = 0; w < nw; ++w) {
    if (one_credit(w)) b.Course(companion(w), 1, 1);
  }
  std::vector<std::string> mlc;
  for (const auto& group : in.master_list_women) {
    if (group.size() == 1) {
      mlc.push_back(Num("c", group[0] + 1));
    } else {
      mlc.push_back(Num("c", group[0] + 1));
      mlc.push_back(Num("c", group[1] + 1));
      mlc.push_back(companion(group[0]));
    }
  }
  for (int m = 0; m < nm; ++m) {
    const auto& p = in.men[m].prefs;
    std::vector<std::string> prefs;
    for (std::size_t r = 0; r < p.size(); ++r) {
      const int w = p[r];
      const int mate = shape.partner[w];
      if (mate < 0) {
        prefs.push_back(Num("c", w + 1));
        continue;
      }
      const bool both = std::find(p.begin(), p.end(), mate) != p.end();
      if (both) {
        if (std::find(p.begin(), p.begin() + r, mate) != p.begin() + r) {
          continue;  // already spliced in with its partner
        }
        const int first = shape.first_in_tie[w] ? w : mate;
        const int second = shape.first_in_tie[w] ? mate : w;
        prefs.push_back(Num("c", first + 1));
        prefs.push_back(Num("c", second + 1));
        prefs.push_back(companion(first));
      } else {
        prefs.push_back(Num("c", w + 1));
        if (one_credit(w)) prefs.push_back(companion(w));
      }
    }
    b.StudentPrefs(Num("s", m + 1), prefs);
  }
  std::vector<std::string> mls;
  for (int m : in.master_list_men) mls.push_back(Num("s", m + 1));
  b.StudentMasterList(mls);
  b.CourseMasterList(mlc);
  b.CoursePrefsFromMasterList();
  return b.Take();
}

Matching SmtiMatchingToCoalition(const SmtiInput& in,
                                 const std::vector<std::pair<int, int>>& mw) {
  const Instance inst = ReduceSmtiCoalition(in);
  std::vector<Pair> pairs;
  for (const auto& [m, w] : mw) {
    const StudentId s(m);
    pairs.emplace_back(s, *inst.FindCourse(Num("c", w + 1)));
    if (auto cp = inst.FindCourse("c" + std::to_string(w + 1) + "p")) {
      pairs.emplace_back(s, *cp);
    }
  }
  return Matching(std::move(pairs));
}

Instance ReduceSmtiDistinctCredits(const SmtiInput& in) {
  const SmtiShape shape = CheckSmti(in);
  const int nm = static_cast<int>(in.men.size());
  const int nw = static_cast<int>(in.women.size());
  const Credits n = nw;
  std::vector<Credits> credits(nw);
  for (int w = 0; w < nw; ++w) {
    const Credits j = shape.position[w] + 1;
    credits[w] = 2 * n - j + 1;
  }
  for (const auto& group : in.master_list_women) {
    if (group.size() == 2) std::swap(credits[group[0]], credits[group[1]]);
  }
  Builder b;
  for (int m = 0; m < nm; ++m) b.Student(Num("s", m + 1), 2 * n);
  for (int w = 0; w < nw; ++w) b.Course(Num("c", w + 1), credits[w], 1);
  for (int m = 0; m < nm; ++m) {
    std::vector<int> p = in.men[m].prefs;
    std::stable_sort(p.begin(), p.end(), [&](int a, int c) {
      return shape.position[a] < shape.position[c];
    });
    std::vector<std::string> prefs;
    for (int w : p) prefs.push_back(Num("c", w + 1));
    b.StudentPrefs(Num("s", m + 1), prefs);
  }
  std::vector<std::string> mls, mlc;
  for (int m : in.master_list_men) mls.push_back(Num("s", m + 1));
  for (const auto& group : in.master_list_women) {
    for (int w : group) mlc.push_back(Num("c", w + 1));
  }
  b.StudentMasterList(mls);
  b.CourseMasterList(mlc);
  b.CoursePrefsFromMasterList();
  return b.Take();
}

Matching SmtiMatchingToDistinctCredits(
    const SmtiInput& in, const std::vector<std::pair<int, int>>& mw) {
  CheckSmti(in);
  std::vector<Pair> pairs;
  for (const auto& [m, w] : mw) pairs.emplace_back(StudentId(m), CourseId(w));
  return Matching(std::move(pairs));
}

// ---- graph gadgets ---------------------------------------------------------

Instance ReduceMinMm(const GraphInput& g) {
  const auto nb = Neighbours(g);
  const int n1 = g.left, n2 = g.right;
  if (g.k < 0 || g.k > n2) throw InputError("K must lie in [0, |W|]");
  Builder b;
  std::vector<std::string> mls;
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 1), 2);
    b.Student(Sub("s", i, 2), 2);
    mls.push_back(Sub("s", i, 1));
    mls.push_back(Sub("s", i, 2));
  }
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 3), 2);
    mls.push_back(Sub("s", i, 3));
  }
  for (int j = 1; j <= n1; ++j) {
    b.Student(Num("p", j), 1);
    mls.push_back(Num("p", j));
  }
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 4), 1);
    mls.push_back(Sub("s", i, 4));
  }
  for (int j = 1; j <= n1; ++j) b.Course(Num("c", j), 1, 1);
  for (int i = 1; i <= n2; ++i) {
    b.Course(Sub("d", i, 1), 2, 1);
    b.Course(Sub("d", i, 2), 2, 1);
    b.Course(Sub("d", i, 3), 1, 1);
  }
  b.Course("e", 2, n2 - g.k);

  for (int i = 1; i <= n2; ++i) {
    const std::string cj = Num("c", nb[i - 1].first + 1);
    const std::string ck = Num("c", nb[i - 1].second + 1);
    b.StudentPrefs(Sub("s", i, 1), {cj, Sub("d", i, 1)});
    b.StudentPrefs(Sub("s", i, 2), {ck, Sub("d", i, 1), Sub("d", i, 2)});
    b.StudentPrefs(Sub("s", i, 3),
                   {Sub("d", i, 2), Sub("d", i, 3), cj, ck, "e"});
    b.StudentPrefs(Sub("s", i, 4), {Sub("d", i, 3)});
  }
  for (int j = 1; j <= n1; ++j) b.StudentPrefs(Num("p", j), {Num("c", j)});
  b.StudentMasterList(mls);
  b.CoursePrefsFromMasterList();
  return b.Take();
}

Matching MinMmForwardMatching(const GraphInput& g,
                              const std::vector<std::pair<int, int>>& edges) {
  const auto mate = CheckForwardMatching(g, edges);
  const auto nb = Neighbours(g);
  std::vector<std::pair<std::string, std::string>> ps;
  std::vector<bool> u_matched(g.left, false);
  for (int i = 1; i <= g.right; ++i) {
    const int u = mate[i - 1];
    if (u >= 0) {
      u_matched[u] = true;
      const int l = Side(nb[i - 1], u);
      ps.emplace_back(Sub("s", i, l), Num("c", u + 1));
      ps.emplace_back(Sub("s", i, 3 - l), Sub("d", i, 1));
      ps.emplace_back(Sub("s", i, 3), Sub("d", i, 2));
    } else {
      ps.emplace_back(Sub("s", i, 1), Sub("d", i, 1));
      ps.emplace_back(Sub("s", i, 2), Sub("d", i, 2));
      ps.emplace_back(Sub("s", i, 3), "e");
    }
    ps.emplace_back(Sub("s", i, 4), Sub("d", i, 3));
  }
  for (int j = 0; j < g.left; ++j) {
    if (!u_matched[j]) ps.emplace_back(Num("p", j + 1), Num("c", j + 1));
  }
  const Instance inst = ReduceMinMm(g);
  return Matching::FromLabels(inst, ps);
}

const char* ToString(ExactMmMode mode) {
  switch (mode) {
    case ExactMmMode::kPairSize:
      return "pair-size";
    case ExactMmMode::kPairSizeBounded:
      return "pair-size-bounded";
    case ExactMmMode::kLqClosures:
      return "lq-closures";
  }
  return "unknown";
}

namespace {

Instance ExactMmPairSize(const GraphInput& g, bool bounded) {
  const auto nb = Neighbours(g);
  const int n1 = g.left, n2 = g.right;
  if (g.k < 0 || g.k > n2 || g.k > n1) {
    throw InputError("K must lie in [0, min(|U|, |W|)]");
  }
  const int np = bounded ? n1 : n1 - g.k;
  Builder b;
  std::vector<std::string> mls, mlc;
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 1), 2);
    b.Student(Sub("s", i, 2), 2);
    mls.push_back(Sub("s", i, 1));
    mls.push_back(Sub("s", i, 2));
  }
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 3), 2);
    mls.push_back(Sub("s", i, 3));
  }
  for (int k = 1; k <= np; ++k) {
    b.Student(Num("p", k), 1);
    mls.push_back(Num("p", k));
  }
  for (int j = 1; j <= n1; ++j) {
    b.Course(Num("c", j), 1, 1);
    mlc.push_back(Num("c", j));
  }
  for (int i = 1; i <= n2; ++i) {
    b.Course(Sub("d", i, 1), 2, 1);
    b.Course(Sub("d", i, 2), 2, 1);
    mlc.push_back(Sub("d", i, 1));
    mlc.push_back(Sub("d", i, 2));
  }
  b.Course("e1", 1, n2 - g.k);
  b.Course("e2", 1, n2 - g.k);
  b.Course("f", 1, g.k);
  mlc.insert(mlc.end(), {"e1", "e2", "f"});

  for (int i = 1; i <= n2; ++i) {
    const std::string cj = Num("c", nb[i - 1].first + 1);
    const std::string ck = Num("c", nb[i - 1].second + 1);
    b.StudentPrefs(Sub("s", i, 1), {cj, Sub("d", i, 1), "f"});
    b.StudentPrefs(Sub("s", i, 2), {ck, Sub("d", i, 1), Sub("d", i, 2), "f"});
    b.StudentPrefs(Sub("s", i, 3), {cj, ck, Sub("d", i, 2), "e1", "e2"});
  }
  for (int k = 1; k <= np; ++k) {
    if (bounded) {
      b.StudentPrefs(Num("p", k), {Num("c", k)});
    } else {
      std::vector<std::string> all;
      for (int j = 1; j <= n1; ++j) all.push_back(Num("c", j));
      b.StudentPrefs(Num("p", k), all);
    }
  }
  b.StudentMasterList(mls);
  b.CourseMasterList(mlc);
  b.CoursePrefsFromMasterList();
  return b.Take();
}

Instance ExactMmLqClosures(const GraphInput& g) {
  const auto nb = Neighbours(g);
  const int n1 = g.left, n2 = g.right;
  if (g.k < 0 || g.k > n2) throw InputError("K must lie in [0, |W|]");
  Builder b;
  std::vector<std::string> mls, mlc;
  for (int i = 1; i <= n2; ++i) {
    for (int r : {1, 4, 2}) {
      b.Student(Sub("s", i, r), 2);
      mls.push_back(Sub("s", i, r));
    }
  }
  for (int i = 1; i <= n2; ++i) {
    b.Student(Sub("s", i, 3), 2);
    mls.push_back(Sub("s", i, 3));
  }
  for (int k = 1; k <= g.k; ++k) {
    b.Student(Num("p", k), 1);
    mls.push_back(Num("p", k));
  }
  b.Student("q", 2);
  b.Student("r", 2);
  mls.insert(mls.end(), {"q", "r"});

  for (int i = 1; i <= n2; ++i) {
    b.Course(Sub("b", i, 1), 1, 2, 2);
    b.Course(Sub("b", i, 2), 1, 2, 2);
    mlc.push_back(Sub("b", i, 1));
    mlc.push_back(Sub("b", i, 2));
  }
  for (int i = 1; i <= n2; ++i) {
    b.Course(Sub("d", i, 1), 2, 2, 2);
    b.Course(Sub("d", i, 2), 2, 1, 0);
    mlc.push_back(Sub("d", i, 1));
    mlc.push_back(Sub("d", i, 2));
  }
  for (int j = 1; j <= n1; ++j) {
    b.Course(Num("c", j), 1, 1, 0);
    mlc.push_back(Num("c", j));
  }
  b.Course("e", 2, n2 - g.k, 0);
  b.Course("f", 2, 2, 2);
  mlc.insert(mlc.end(), {"e", "f"});

  std::vector<std::string> all_b;
  for (int i = 1; i <= n2; ++i) {
    all_b.push_back(Sub("b", i, 1));
    all_b.push_back(Sub("b", i, 2));
  }
  for (int i = 1; i <= n2; ++i) {
    const std::string cj = Num("c", nb[i - 1].first + 1);
    const std::string ck = Num("c", nb[i - 1].second + 1);
    b.StudentPrefs(Sub("s", i, 1), {Sub("b", i, 1), Sub("d", i, 1), cj});
    b.StudentPrefs(Sub("s", i, 2),
                   {Sub("b", i, 2), Sub("d", i, 1), Sub("d", i, 2), ck});
    b.StudentPrefs(Sub("s", i, 3), {Sub("d", i, 2), cj, ck, "e"});
    b.StudentPrefs(Sub("s", i, 4), {Sub("d", i, 1)});
  }
  for (int k = 1; k <= g.k; ++k) b.StudentPrefs(Num("p", k), all_b);
  b.StudentPrefs("q", {"e", "f"});
  b.StudentPrefs("r", {"f"});
  b.StudentMasterList(mls);
  b.CourseMasterList(mlc);
  b.CoursePrefsFromMasterList();
  return b.Take();
}

}  // namespace

Instance ReduceExactMm(const GraphInput& g, ExactMmMode mode) {
  switch (mode) {
    case ExactMmMode::kPairSize:
      return ExactMmPairSize(g, false);
    case ExactMmMode::kPairSizeBounded:
      return ExactMmPairSize(g, true);
    case ExactMmMode::kLqClosures:
      return ExactMmLqClosures(g);
  }
  throw InputError("unknown mode");
}

Matching ExactMmForwardMatching(const GraphInput& g, ExactMmMode mode,
                                const std::vector<std::pair<int, int>>& edges) {
  const auto mate = CheckForwardMatching(g, edges);
  const auto nb = Neighbours(g);
  std::vector<std::pair<std::string, std::string>> ps;
  std::vector<bool> u_matched(g.left, false);
  int next_p = 1;
  for (int i = 1; i <= g.right; ++i) {
    const int u = mate[i - 1];
    if (u >= 0) {
      u_matched[u] = true;
      const int l = Side(nb[i - 1], u);
      ps.emplace_back(Sub("s", i, l), Num("c", u + 1));
      ps.emplace_back(Sub("s", i, 3 - l), Sub("d", i, 1));
      ps.emplace_back(Sub("s", i, 3), Sub("d", i, 2));
      if (mode == ExactMmMode::kLqClosures) {
        ps.emplace_back(Sub("s", i, l), Sub("b", i, l));
        ps.emplace_back(Sub("s", i, 4), Sub("d", i, 1));
        ps.emplace_back(Num("p", next_p++), Sub("b", i, l));
      } else {
        ps.emplace_back(Sub("s", i, l), "f");
      }
    } else {
      ps.emplace_back(Sub("s", i, 1), Sub("d", i, 1));
      ps.emplace_back(Sub("s", i, 2), Sub("d", i, 2));
      if (mode == ExactMmMode::kLqClosures) {
        ps.emplace_back(Sub("s", i, 3), "e");
        ps.emplace_back(Sub("s", i, 4), Sub("d", i, 1));
      } else {
        ps.emplace_back(Sub("s", i, 3), "e1");
        ps.emplace_back(Sub("s", i, 3), "e2");
      }
    }
  }
  if (mode == ExactMmMode::kLqClosures) {
    ps.emplace_back("q", "f");
    ps.emplace_back("r", "f");
  } else {
    int k = 1;
    for (int j = 0; j < g.left; ++j) {
      if (u_matched[j]) continue;
      const int p = mode == ExactMmMode::kPairSizeBounded ? j + 1 : k++;
      ps.emplace_back(Num("p", p), Num("c", j + 1));
    }
  }
  const Instance inst = ReduceExactMm(g, mode);
  return Matching::FromLabels(inst, ps);
}

GraphInput SmallGadgetGraph() {
  GraphInput g;
  g.left = 2;
  g.right = 3;
  for (int w = 0; w < 3; ++w) {
    g.edges.emplace_back(0, w);
    g.edges.emplace_back(1, w);
  }
  g.k = 2;
  return g;
}

// ---- random instances ------------------------------------------------------

Instance GenRandom(const RandomParams& p, std::uint64_t seed) {
  if (p.students < 0 || p.courses < 0) {
    throw InputError("negative student or course count");
  }
  if (p.credits.first < 1 || p.credits.first > p.credits.second ||
      p.limits.first < 0 || p.limits.first > p.limits.second ||
      p.upper_quotas.first < 0 || p.upper_quotas.first > p.upper_quotas.second ||
      p.lower_quotas.first < 0 || p.lower_quotas.first > p.lower_quotas.second) {
    throw InputError("empty or invalid parameter range");
  }
  if (p.density < 0.0 || p.density > 1.0) {
    throw InputError("density must lie in [0, 1]");
  }
  if (p.rules > 0 && p.courses < 2) {
    throw InputError("rules need at least two courses");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](auto lo, auto hi) {
    return std::uniform_int_distribution<decltype(lo)>(lo, hi)(rng);
  };
  std::bernoulli_distribution accept(p.density);

  Instance inst;
  for (int s = 0; s < p.students; ++s) {
    inst.students.push_back(
        {Num("s", s + 1), uniform(p.limits.first, p.limits.second), {}});
  }
  for (int c = 0; c < p.courses; ++c) {
    const int upper = uniform(p.upper_quotas.first, p.upper_quotas.second);
    const int lower =
        std::min(upper, uniform(p.lower_quotas.first, p.lower_quotas.second));
    inst.courses.push_back({Num("c", c + 1),
                            uniform(p.credits.first, p.credits.second), upper,
                            lower, {}});
  }
  std::vector<std::vector<bool>> ok(p.students,
                                    std::vector<bool>(p.courses, false));
  for (int s = 0; s < p.students; ++s) {
    for (int c = 0; c < p.courses; ++c) ok[s][c] = accept(rng);
  }

  std::vector<int> student_order(p.students), course_order(p.courses);
  std::iota(student_order.begin(), student_order.end(), 0);
  std::iota(course_order.begin(), course_order.end(), 0);
  if (p.master_list) std::shuffle(student_order.begin(), student_order.end(), rng);
  if (p.master_list_courses) {
    std::shuffle(course_order.begin(), course_order.end(), rng);
  }

  for (int s = 0; s < p.students; ++s) {
    std::vector<int> list;
    for (int c : course_order) {
      if (ok[s][c]) list.push_back(c);
    }
    if (!p.master_list_courses) std::shuffle(list.begin(), list.end(), rng);
    for (int c : list) inst.students[s].prefs.push_back(CourseId(c));
  }
  for (int c = 0; c < p.courses; ++c) {
    std::vector<int> list;
    for (int s : student_order) {
      if (ok[s][c]) list.push_back(s);
    }
    if (!p.master_list) std::shuffle(list.begin(), list.end(), rng);
    for (int s : list) inst.courses[c].prefs.push_back(StudentId(s));
  }
  if (p.master_list) {
    std::vector<StudentId> ml;
    for (int s : student_order) ml.push_back(StudentId(s));
    inst.master_list_students = std::move(ml);
  }
  if (p.master_list_courses) {
    std::vector<CourseId> ml;
    for (int c : course_order) ml.push_back(CourseId(c));
    inst.master_list_courses = std::move(ml);
  }

  for (int r = 0; r < p.rules; ++r) {
    std::vector<int> pool(p.courses);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    const int size = uniform(2, std::min(3, p.courses));
    std::vector<CourseId> group;
    for (int i = 0; i < size; ++i) group.push_back(CourseId(pool[i]));
    std::optional<StudentId> owner;
    if (p.students > 0 && uniform(0, 1) == 1) {
      owner = StudentId(uniform(0, p.students - 1));
    }
    if (uniform(0, 1) == 0) {
      inst.rules.push_back(FeasibilityRule::Exclude(std::move(group), owner));
    } else {
      const int k = uniform(0, size - 1);
      inst.rules.push_back(FeasibilityRule::AtMost(k, std::move(group), owner));
    }
  }
  return inst;
}

// ---- worked examples -------------------------------------------------------

namespace {

// s1 (T=2), s2 (T=1); c1, c2 one credit, c3 two credits; all quotas 1.
Builder ThreeCourseExample(const std::vector<std::string>& s1_prefs) {
  Builder b;
  b.Student("s1", 2);
  b.Student("s2", 1);
  b.Course("c1", 1, 1);
  b.Course("c2", 1, 1);
  b.Course("c3", 2, 1);
  b.StudentPrefs("s1", s1_prefs);
  b.StudentPrefs("s2", {"c2", "c1"});
  b.CoursePrefs("c1", {"s2", "s1"});
  b.CoursePrefs("c2", {"s1", "s2"});
  b.CoursePrefs("c3", {"s1"});
  return b;
}

}  // namespace

std::map<std::string, Fixture> Fixtures() {
  std::map<std::string, Fixture> out;
  const std::vector<std::pair<std::string, std::string>> green = {
      {"s1", "c3"}, {"s2", "c2"}};
  for (const char* name : {"fig1", "fig3"}) {
    Builder b = ThreeCourseExample({"c1", "c3", "c2"});
    Matching m = b.Pairs(green);
    out[name] = Fixture{b.Take(), std::move(m)};
  }
  {
    Builder b = ThreeCourseExample({"c1", "c2", "c3"});
    Matching m = b.Pairs(green);
    out["fig2"] = Fixture{b.Take(), std::move(m)};
  }
  {
    Builder b;
    b.Student("s1", 2);
    b.Course("c1", 1, 1);
    b.Course("c2", 2, 1);
    b.Course("c3", 1, 1);
    b.StudentPrefs("s1", {"c1", "c2", "c3"});
    for (const char* c : {"c1", "c2", "c3"}) b.CoursePrefs(c, {"s1"});
    out["fig4"] = Fixture{b.Take(), std::nullopt};
  }
  out["fig5"] = Fixture{ThreeCourseExample({"c1", "c3", "c2"}).Take(),
                        std::nullopt};
  {
    Builder b;
    b.Student("s1", 2);
    b.Course("c1", 1, 1);
    b.Course("c2", 2, 1);
    b.StudentPrefs("s1", {"c1", "c2"});
    b.CoursePrefs("c1", {"s1"});
    b.CoursePrefs("c2", {"s1"});
    out["sec42"] = Fixture{b.Take(), std::nullopt};
  }
  {
    Builder b;
    b.Student("s1", 2);
    b.Student("s2", 2);
    b.Course("c1", 2, 1);
    b.Course("c2", 2, 1);
    b.StudentPrefs("s1", {"c1", "c2"});
    b.StudentPrefs("s2", {"c1", "c2"});
    b.StudentMasterList({"s1", "s2"});
    b.CoursePrefsFromMasterList();
    out["ml"] = Fixture{b.Take(), std::nullopt};
  }
  return out;
}

}  // namespace coursealloc
