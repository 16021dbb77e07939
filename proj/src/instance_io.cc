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

#include "coursealloc/instance_io.h"

#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace coursealloc {

ParseError::ParseError(int line, const std::string& message)
    : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message
                          : message),
      line_(line) {}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Sections in file order; each name appears once.
struct Document {
  std::vector<std::string> order;
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, int> header_line;

  const std::vector<Line>* Find(const std::string& name) const {
    const auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  }
  bool Has(const std::string& name) const { return Find(name) != nullptr; }
};

bool IsSpace(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

Document Lex(std::string_view text, const std::set<std::string>& allowed) {
  Document doc;
  std::vector<Line>* current = nullptr;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && IsSpace(raw[i])) ++i;
      std::size_t j = i;
      while (j < raw.size() && !IsSpace(raw[j])) ++j;
      if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty()) continue;
    const std::string& first = line.tokens.front();
    if (first.front() == '[') {
      if (line.tokens.size() != 1 || first.back() != ']' || first.size() < 3) {
        throw ParseError(number, "malformed section header");
      }
      const std::string name = first.substr(1, first.size() - 2);
      if (!allowed.count(name)) {
        throw ParseError(number, "unknown section [" + name + "]");
      }
      if (doc.sections.count(name)) {
        throw ParseError(number, "section [" + name + "] appears twice");
      }
      doc.order.push_back(name);
      doc.header_line[name] = number;
      current = &doc.sections[name];
      continue;
    }
    if (current == nullptr) {
      throw ParseError(number, "content before the first section header");
    }
    current->push_back(std::move(line));
  }
  return doc;
}

bool ValidLabel(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

std::string CheckLabel(const Line& line, const std::string& s) {
  if (!ValidLabel(s)) throw ParseError(line.number, "invalid label '" + s + "'");
  return s;
}

std::int64_t ParseInt(const Line& line, std::string_view s,
                      std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line.number, "expected an integer for " +
                                      std::string(what) + ", got '" +
                                      std::string(s) + "'");
  }
  return v;
}

std::int32_t ParseInt32(const Line& line, std::string_view s,
                        std::string_view what) {
  const std::int64_t v = ParseInt(line, s, what);
  if (v < std::numeric_limits<std::int32_t>::min() ||
      v > std::numeric_limits<std::int32_t>::max()) {
    throw ParseError(line.number, std::string(what) + " is out of range");
  }
  return static_cast<std::int32_t>(v);
}

// Comma-separated labels; an empty string is the empty list.
std::vector<std::string> SplitList(const Line& line, std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string item(
        s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
    out.push_back(CheckLabel(line, item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A list spread over whitespace-separated tokens, e.g. "s1, s2,s3".
std::vector<std::string> JoinedList(const Line& line) {
  std::string joined;
  for (const auto& t : line.tokens) joined += t;
  return SplitList(line, joined);
}

class KeyValues {
 public:
  KeyValues(const Line& line, std::size_t first,
            std::initializer_list<std::string_view> known)
      : line_(line) {
    for (std::size_t i = first; i < line.tokens.size(); ++i) {
      const std::string& t = line.tokens[i];
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError(line.number, "expected key=value, got '" + t + "'");
      }
      std::string key = t.substr(0, eq);
      bool ok = false;
      for (auto k : known) ok = ok || k == key;
      if (!ok) throw ParseError(line.number, "unknown key '" + key + "'");
      if (!values_.emplace(key, t.substr(eq + 1)).second) {
        throw ParseError(line.number, "key '" + key + "' given twice");
      }
    }
  }

  const std::string& Require(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      throw ParseError(line_.number, "missing " + key + "=");
    }
    return it->second;
  }

  std::optional<std::string> Get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const Line& line_;
  std::map<std::string, std::string> values_;
};

template <typename Id>
class LabelTable {
 public:
  void Declare(const Line& line, const std::string& label, const char* kind) {
    if (!ids_.emplace(label, Id(static_cast<int>(ids_.size()))).second) {
      throw ParseError(line.number,
                       "duplicate " + std::string(kind) + " '" + label + "'");
    }
  }

  Id Resolve(const Line& line, const std::string& label,
             const char* kind) const {
    const auto it = ids_.find(label);
    if (it == ids_.end()) {
      throw ParseError(line.number,
                       "unknown " + std::string(kind) + " '" + label + "'");
    }
    return it->second;
  }

  std::vector<Id> ResolveAll(const Line& line,
                             const std::vector<std::string>& labels,
                             const char* kind) const {
    std::vector<Id> out;
    for (const auto& l : labels) out.push_back(Resolve(line, l, kind));
    return out;
  }

  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, Id> ids_;
};

template <typename Id>
std::string JoinLabels(const std::vector<Id>& ids,
                       const std::function<const std::string&(Id)>& label) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ',';
    out += label(ids[i]);
  }
  return out;
}

}  // namespace

ParsedInstance ParseInstance(std::string_view text, bool validate) {
  const Document doc =
      Lex(text, {"students", "courses", "masterlist-students",
                 "masterlist-courses", "constraints", "matching"});
  ParsedInstance out;
  Instance& inst = out.instance;
  LabelTable<StudentId> students;
  LabelTable<CourseId> courses;

  // Declarations first so references may point forward.
  struct Pending {
    const Line* line;
    std::vector<std::string> prefs;
  };
  std::vector<Pending> student_prefs, course_prefs;
  if (const auto* lines = doc.Find("students")) {
    for (const Line& line : *lines) {
      const std::string label = CheckLabel(line, line.tokens[0]);
      students.Declare(line, label, "student");
      const KeyValues kv(line, 1, {"credits", "prefs"});
      inst.students.push_back(
          {label, ParseInt(line, kv.Require("credits"), "credits"), {}});
      student_prefs.push_back({&line, SplitList(line, kv.Require("prefs"))});
    }
  }
  if (const auto* lines = doc.Find("courses")) {
    for (const Line& line : *lines) {
      const std::string label = CheckLabel(line, line.tokens[0]);
      courses.Declare(line, label, "course");
      const KeyValues kv(line, 1, {"credits", "upper", "lower", "prefs"});
      Course c;
      c.label = label;
      c.credits = ParseInt(line, kv.Require("credits"), "credits");
      c.upper_quota = ParseInt32(line, kv.Require("upper"), "upper");
      if (auto lower = kv.Get("lower")) {
        c.lower_quota = ParseInt32(line, *lower, "lower");
      }
      inst.courses.push_back(std::move(c));
      course_prefs.push_back({&line, SplitList(line, kv.Require("prefs"))});
    }
  }
  for (std::size_t s = 0; s < student_prefs.size(); ++s) {
    inst.students[s].prefs = courses.ResolveAll(
        *student_prefs[s].line, student_prefs[s].prefs, "course");
  }
  for (std::size_t c = 0; c < course_prefs.size(); ++c) {
    inst.courses[c].prefs = students.ResolveAll(
        *course_prefs[c].line, course_prefs[c].prefs, "student");
  }

  if (const auto* lines = doc.Find("masterlist-students")) {
    std::vector<StudentId> ml;
    for (const Line& line : *lines) {
      for (StudentId s : students.ResolveAll(line, JoinedList(line), "student")) {
        ml.push_back(s);
      }
    }
    inst.master_list_students = std::move(ml);
  }
  if (const auto* lines = doc.Find("masterlist-courses")) {
    std::vector<CourseId> ml;
    for (const Line& line : *lines) {
      for (CourseId c : courses.ResolveAll(line, JoinedList(line), "course")) {
        ml.push_back(c);
      }
    }
    inst.master_list_courses = std::move(ml);
  }

  if (const auto* lines = doc.Find("constraints")) {
    for (const Line& line : *lines) {
      const auto& t = line.tokens;
      std::size_t next = 0;
      FeasibilityRule rule;
      if (t[0] == "exclude" && t.size() >= 2) {
        rule = FeasibilityRule::Exclude(
            courses.ResolveAll(line, SplitList(line, t[1]), "course"));
        next = 2;
      } else if (t[0] == "atmost" && t.size() >= 4 && t[2] == "of") {
        rule = FeasibilityRule::AtMost(
            ParseInt32(line, t[1], "atmost bound"),
            courses.ResolveAll(line, SplitList(line, t[3]), "course"));
        next = 4;
      } else {
        throw ParseError(line.number,
                         "expected 'exclude <courses>' or "
                         "'atmost <k> of <courses>'");
      }
      if (next < t.size()) {
        if (t[next] != "for" || next + 2 != t.size()) {
          throw ParseError(line.number, "expected 'for <student>'");
        }
        rule.owner = students.Resolve(line, t[next + 1], "student");
      }
      inst.rules.push_back(std::move(rule));
    }
  }

  if (const auto* lines = doc.Find("matching")) {
    std::vector<Pair> pairs;
    for (const Line& line : *lines) {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected '<student> <course>'");
      }
      pairs.emplace_back(students.Resolve(line, line.tokens[0], "student"),
                         courses.Resolve(line, line.tokens[1], "course"));
    }
    out.matching = Matching(std::move(pairs));
  }

  if (validate) {
    const auto problems = ValidateInstance(inst);
    if (!problems.empty()) {
      throw InputError("invalid instance: " + problems.front().message);
    }
  }
  return out;
}

std::string SerializeMatching(const Instance& inst, const Matching& m) {
  std::string out = "[matching]\n";
  for (const auto& [s, c] : m.pairs()) {
    out += inst.student(s).label + " " + inst.course(c).label + "\n";
  }
  return out;
}

std::string SerializeInstance(const Instance& inst, const Matching* matching) {
  const std::function<const std::string&(CourseId)> course_label =
      [&](CourseId c) -> const std::string& { return inst.course(c).label; };
  const std::function<const std::string&(StudentId)> student_label =
      [&](StudentId s) -> const std::string& { return inst.student(s).label; };

  std::ostringstream out;
  out << "[students]\n";
  for (const Student& s : inst.students) {
    out << s.label << " credits=" << s.credit_limit
        << " prefs=" << JoinLabels(s.prefs, course_label) << "\n";
  }
  out << "[courses]\n";
  for (const Course& c : inst.courses) {
    out << c.label << " credits=" << c.credits << " upper=" << c.upper_quota;
    if (c.lower_quota != 0) out << " lower=" << c.lower_quota;
    out << " prefs=" << JoinLabels(c.prefs, student_label) << "\n";
  }
  if (inst.master_list_students) {
    out << "[masterlist-students]\n";
    if (!inst.master_list_students->empty()) {
      out << JoinLabels(*inst.master_list_students, student_label) << "\n";
    }
  }
  if (inst.master_list_courses) {
    out << "[masterlist-courses]\n";
    if (!inst.master_list_courses->empty()) {
      out << JoinLabels(*inst.master_list_courses, course_label) << "\n";
    }
  }
  if (!inst.rules.empty()) {
    out << "[constraints]\n";
    for (const FeasibilityRule& r : inst.rules) {
      if (r.kind == FeasibilityRule::Kind::kExcludedCombination) {
        out << "exclude " << JoinLabels(r.courses, course_label);
      } else {
        out << "atmost " << r.k << " of " << JoinLabels(r.courses, course_label);
      }
      if (r.owner) out << " for " << inst.student(*r.owner).label;
      out << "\n";
    }
  }
  if (matching != nullptr) out << SerializeMatching(inst, *matching);
  return out.str();
}

// ---- source problems -------------------------------------------------------

SubsetSumInput ParseSubsetSum(std::string_view text) {
  const Document doc = Lex(text, {"subset-sum"});
  const auto* lines = doc.Find("subset-sum");
  if (lines == nullptr) throw ParseError(0, "missing [subset-sum] section");
  SubsetSumInput x;
  bool have_target = false, have_sizes = false;
  for (const Line& line : *lines) {
    const KeyValues kv(line, 0, {"target", "sizes"});
    if (auto t = kv.Get("target")) {
      if (have_target) throw ParseError(line.number, "target given twice");
      x.target = ParseInt(line, *t, "target");
      have_target = true;
    }
    if (auto s = kv.Get("sizes")) {
      if (have_sizes) throw ParseError(line.number, "sizes given twice");
      std::string_view rest = *s;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        x.sizes.push_back(ParseInt(line, rest.substr(0, comma), "size"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) throw ParseError(line.number, "trailing comma");
      }
      have_sizes = true;
    }
  }
  if (!have_target || !have_sizes) {
    throw ParseError(doc.header_line.at("subset-sum"),
                     "[subset-sum] needs target= and sizes=");
  }
  return x;
}

namespace {

std::vector<std::pair<int, int>> IndexPairs(const std::vector<Line>& lines,
                                            int left, int right) {
  std::vector<std::pair<int, int>> out;
  for (const Line& line : lines) {
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected '<u> <w>' (1-based)");
    }
    const int u = ParseInt32(line, line.tokens[0], "u");
    const int w = ParseInt32(line, line.tokens[1], "w");
    if (u < 1 || u > left || w < 1 || w > right) {
      throw ParseError(line.number, "vertex index out of range");
    }
    out.emplace_back(u - 1, w - 1);
  }
  return out;
}

}  // namespace

ParsedGraph ParseGraph(std::string_view text) {
  const Document doc = Lex(text, {"graph", "edges", "matching"});
  const auto* header = doc.Find("graph");
  if (header == nullptr || header->size() != 1) {
    throw ParseError(0, "expected one 'left=N right=N k=K' line in [graph]");
  }
  const Line& line = header->front();
  const KeyValues kv(line, 0, {"left", "right", "k"});
  ParsedGraph out;
  out.graph.left = ParseInt32(line, kv.Require("left"), "left");
  out.graph.right = ParseInt32(line, kv.Require("right"), "right");
  out.graph.k = ParseInt32(line, kv.Require("k"), "k");
  if (out.graph.left < 0 || out.graph.right < 0) {
    throw ParseError(line.number, "vertex counts must be non-negative");
  }
  if (const auto* edges = doc.Find("edges")) {
    out.graph.edges = IndexPairs(*edges, out.graph.left, out.graph.right);
  }
  if (const auto* m = doc.Find("matching")) {
    out.matching = IndexPairs(*m, out.graph.left, out.graph.right);
  }
  return out;
}

ParsedHrs ParseHrs(std::string_view text) {
  const Document doc = Lex(text, {"residents", "hospitals", "matching"});
  ParsedHrs out;
  LabelTable<StudentId> residents;  // ids used only as indices
  LabelTable<CourseId> hospitals;
  struct Pending {
    const Line* line;
    std::vector<std::string> prefs;
  };
  std::vector<Pending> r_prefs, h_prefs;
  if (const auto* lines = doc.Find("residents")) {
    for (const Line& line : *lines) {
      const std::string label = CheckLabel(line, line.tokens[0]);
      residents.Declare(line, label, "resident");
      const KeyValues kv(line, 1, {"size", "prefs"});
      out.input.residents.push_back(
          {label, ParseInt32(line, kv.Require("size"), "size"), {}});
      r_prefs.push_back({&line, SplitList(line, kv.Require("prefs"))});
    }
  }
  if (const auto* lines = doc.Find("hospitals")) {
    for (const Line& line : *lines) {
      const std::string label = CheckLabel(line, line.tokens[0]);
      hospitals.Declare(line, label, "hospital");
      const KeyValues kv(line, 1, {"quota", "prefs"});
      out.input.hospitals.push_back(
          {label, ParseInt32(line, kv.Require("quota"), "quota"), {}});
      h_prefs.push_back({&line, SplitList(line, kv.Require("prefs"))});
    }
  }
  for (std::size_t r = 0; r < r_prefs.size(); ++r) {
    for (CourseId h : hospitals.ResolveAll(*r_prefs[r].line, r_prefs[r].prefs,
                                           "hospital")) {
      out.input.residents[r].prefs.push_back(h.value);
    }
  }
  for (std::size_t h = 0; h < h_prefs.size(); ++h) {
    for (StudentId r : residents.ResolveAll(*h_prefs[h].line, h_prefs[h].prefs,
                                            "resident")) {
      out.input.hospitals[h].prefs.push_back(r.value);
    }
  }
  if (const auto* lines = doc.Find("matching")) {
    std::vector<std::pair<int, int>> pairs;
    for (const Line& line : *lines) {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected '<resident> <hospital>'");
      }
      pairs.emplace_back(
          residents.Resolve(line, line.tokens[0], "resident").value,
          hospitals.Resolve(line, line.tokens[1], "hospital").value);
    }
    out.matching = std::move(pairs);
  }
  return out;
}

ParsedSmti ParseSmti(std::string_view text) {
  const Document doc = Lex(text, {"men", "women", "masterlist-men",
                                  "masterlist-women", "matching"});
  ParsedSmti out;
  LabelTable<StudentId> men;
  LabelTable<CourseId> women;
  struct Pending {
    const Line* line;
    std::vector<std::string> prefs;
  };
  std::vector<Pending> m_prefs, w_prefs;
  auto read_side = [](const std::vector<Line>* lines, auto& table,
                      const char* kind, std::vector<SmtiInput::Agent>& agents,
                      std::vector<Pending>& pending) {
    if (lines == nullptr) return;
    for (const Line& line : *lines) {
      const std::string label = CheckLabel(line, line.tokens[0]);
      table.Declare(line, label, kind);
      const KeyValues kv(line, 1, {"prefs"});
      agents.push_back({label, {}});
      pending.push_back({&line, SplitList(line, kv.Require("prefs"))});
    }
  };
  read_side(doc.Find("men"), men, "man", out.input.men, m_prefs);
  read_side(doc.Find("women"), women, "woman", out.input.women, w_prefs);
  for (std::size_t m = 0; m < m_prefs.size(); ++m) {
    for (CourseId w :
         women.ResolveAll(*m_prefs[m].line, m_prefs[m].prefs, "woman")) {
      out.input.men[m].prefs.push_back(w.value);
    }
  }
  for (std::size_t w = 0; w < w_prefs.size(); ++w) {
    for (StudentId m :
         men.ResolveAll(*w_prefs[w].line, w_prefs[w].prefs, "man")) {
      out.input.women[w].prefs.push_back(m.value);
    }
  }
  if (const auto* lines = doc.Find("masterlist-men")) {
    for (const Line& line : *lines) {
      for (StudentId m : men.ResolveAll(line, JoinedList(line), "man")) {
        out.input.master_list_men.push_back(m.value);
      }
    }
  }
  if (const auto* lines = doc.Find("masterlist-women")) {
    for (const Line& line : *lines) {
      std::vector<int> group;
      for (CourseId w : women.ResolveAll(line, JoinedList(line), "woman")) {
        group.push_back(w.value);
      }
      out.input.master_list_women.push_back(std::move(group));
    }
  }
  if (const auto* lines = doc.Find("matching")) {
    std::vector<std::pair<int, int>> pairs;
    for (const Line& line : *lines) {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected '<man> <woman>'");
      }
      pairs.emplace_back(men.Resolve(line, line.tokens[0], "man").value,
                         women.Resolve(line, line.tokens[1], "woman").value);
    }
    out.matching = std::move(pairs);
  }
  return out;
}

Fixture ReduceFromText(std::string_view source, std::string_view src) {
  const std::string from(source);
  Instance inst;
  std::optional<Matching> m;
  if (from == "subset-sum") {
    Fixture f = GadgetSubsetSum(ParseSubsetSum(src));
    inst = std::move(f.instance);
    m = std::move(f.matching);
  } else if (from == "hrs" || from == "hrs-fc") {
    const ParsedHrs p = ParseHrs(src);
    const HrsMode mode = from == "hrs" ? HrsMode::kPair : HrsMode::kFirstCoalition;
    inst = ReduceHrs(p.input, mode);
    if (p.matching) m = HrsMatchingToCa(p.input, mode, *p.matching);
  } else if (from == "smti") {
    const ParsedSmti p = ParseSmti(src);
    inst = ReduceSmtiCoalition(p.input);
    if (p.matching) m = SmtiMatchingToCoalition(p.input, *p.matching);
  } else if (from == "smti-distinct") {
    const ParsedSmti p = ParseSmti(src);
    inst = ReduceSmtiDistinctCredits(p.input);
    if (p.matching) m = SmtiMatchingToDistinctCredits(p.input, *p.matching);
  } else if (from == "min-mm") {
    const ParsedGraph p = ParseGraph(src);
    inst = ReduceMinMm(p.graph);
    if (p.matching) m = MinMmForwardMatching(p.graph, *p.matching);
  } else if (from == "exact-mm" || from == "exact-mm-bounded" ||
             from == "exact-mm-lq") {
    const ParsedGraph p = ParseGraph(src);
    const ExactMmMode mode = from == "exact-mm" ? ExactMmMode::kPairSize
                             : from == "exact-mm-bounded"
                                 ? ExactMmMode::kPairSizeBounded
                                 : ExactMmMode::kLqClosures;
    inst = ReduceExactMm(p.graph, mode);
    if (p.matching) m = ExactMmForwardMatching(p.graph, mode, *p.matching);
  } else {
    throw InputError("unknown source problem '" + from + "'");
  }
  return Fixture{std::move(inst), std::move(m)};
}

}  // namespace coursealloc
