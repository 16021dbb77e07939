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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coursealloc/instance_io.h"
#include "coursealloc/model.h"
#include "coursealloc/oracle.h"
#include "coursealloc/reductions.h"
#include "coursealloc/report.h"
#include "coursealloc/solve.h"
#include "coursealloc/verify.h"

namespace py = pybind11;

namespace coursealloc {
namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

LabelPairs ToLabels(const Instance& inst, const Matching& m) {
  LabelPairs out;
  for (const auto& [s, c] : m.pairs()) {
    out.emplace_back(inst.student(s).label, inst.course(c).label);
  }
  return out;
}

Matching FromLabels(const Instance& inst, const LabelPairs& pairs) {
  Matching m = Matching::FromLabels(inst, pairs);
  const auto problems = CheckMatching(inst, m);
  if (!problems.empty()) {
    throw InputError("not a matching: " + problems.front().message);
  }
  return m;
}

std::vector<std::string> CourseLabels(const Instance& inst,
                                      const std::vector<CourseId>& cs) {
  std::vector<std::string> out;
  for (CourseId c : cs) out.push_back(inst.course(c).label);
  return out;
}

StabilityNotion Notion(const std::string& name) {
  const auto n = ParseNotion(name);
  if (!n) throw InputError("unknown notion '" + name + "'");
  return *n;
}

LqMode Lq(const std::string& name) {
  const auto lq = ParseLqMode(name);
  if (!lq) throw InputError("unknown lower-quota mode '" + name + "'");
  return *lq;
}

py::object OptionalMatching(const Instance& inst,
                            const std::optional<Matching>& m) {
  if (!m) return py::none();
  return py::cast(ToLabels(inst, *m));
}

py::tuple Parsed(Instance inst, const std::optional<Matching>& m) {
  py::object matching = OptionalMatching(inst, m);
  return py::make_tuple(std::move(inst), matching);
}

py::object VerifyPy(const Instance& inst, const LabelPairs& pairs,
                    const std::string& notion, const std::string& mode,
                    std::uint64_t exhaustive_cap) {
  const Matching m = FromLabels(inst, pairs);
  const auto parsed_mode = ParseVerifyMode(mode);
  if (!parsed_mode) throw InputError("unknown mode '" + mode + "'");
  VerifyOptions opts;
  opts.mode = *parsed_mode;
  opts.exhaustive_cap = exhaustive_cap;
  const VerifyResult r = Verify(inst, m, Notion(notion), opts);
  if (r.stable()) return py::none();
  const BlockingWitness& w = *r.witness;
  py::dict out;
  out["student"] = inst.student(w.student).label;
  out["coalition"] = CourseLabels(inst, w.coalition);
  out["drop"] = CourseLabels(inst, w.drop_set);
  out["text"] = WitnessSummary(inst, w);
  out["conditions"] = WitnessConditions(inst, m, w);
  return std::move(out);
}

LabelPairs SolvePy(const Instance& inst, const std::string& algorithm) {
  if (algorithm == "pair-size-da") return ToLabels(inst, SolvePairSizeDa(inst));
  if (algorithm == "serial-dictatorship") {
    return ToLabels(inst, SolveMasterList(inst));
  }
  throw InputError("unknown algorithm '" + algorithm + "'");
}

py::dict SizePy(const Instance& inst, const LabelPairs& pairs) {
  const SizeReport r = MatchingSize(inst, FromLabels(inst, pairs));
  py::dict out;
  out["size"] = r.size;
  out["course_complete"] = r.course_complete;
  out["student_complete"] = r.student_complete;
  return out;
}

py::object MaxStablePy(const Instance& inst, const std::string& notion,
                       const std::string& lq, std::int64_t node_cap) {
  SearchOptions opts;
  opts.node_cap = node_cap;
  const LqMode mode = Lq(lq);
  const auto r = mode == LqMode::kClosures
                     ? LqClosuresMax(inst, Notion(notion), opts)
                     : MaxStableSearch(inst, Notion(notion), mode, opts);
  if (!r) return py::none();
  py::dict out;
  out["matching"] = ToLabels(inst, r->matching);
  out["size"] = r->size;
  out["open_courses"] = CourseLabels(inst, r->open_courses);
  return std::move(out);
}

py::dict OraclePy(const Instance& inst, const std::string& lq,
                  std::size_t max_pairs) {
  OracleOptions opts;
  opts.max_pairs = max_pairs;
  const EnumerationReport r = MaxStableBrute(inst, Lq(lq), opts);
  py::dict notions;
  for (StabilityNotion n : kAllNotions) {
    const int i = static_cast<int>(n);
    py::dict entry;
    entry["stable_count"] = r.stable_counts[i];
    entry["max_size"] = r.max_stable_size[i] ? py::cast(*r.max_stable_size[i])
                                             : py::none();
    entry["best"] = OptionalMatching(inst, r.best[i]);
    notions[ToString(n)] = entry;
  }
  py::dict out;
  out["total_matchings"] = r.total_matchings;
  out["notions"] = notions;
  return out;
}

Instance GeneratePy(int students, int courses, std::uint64_t seed,
                    std::pair<Credits, Credits> credits,
                    std::pair<Credits, Credits> limits,
                    std::pair<int, int> upper, std::pair<int, int> lower,
                    double density, bool master_list, bool master_list_courses,
                    int rules) {
  RandomParams p;
  p.students = students;
  p.courses = courses;
  p.credits = credits;
  p.limits = limits;
  p.upper_quotas = upper;
  p.lower_quotas = lower;
  p.density = density;
  p.master_list = master_list;
  p.master_list_courses = master_list_courses;
  p.rules = rules;
  return GenRandom(p, seed);
}

std::vector<std::string> StudentLabels(const Instance& inst) {
  std::vector<std::string> out;
  for (const auto& s : inst.students) out.push_back(s.label);
  return out;
}

}  // namespace
}  // namespace coursealloc

PYBIND11_MODULE(_coursealloc, m) {
  namespace ca = coursealloc;
  m.doc() = "Stable course allocation with credits.";

  static py::exception<ca::CapabilityError> budget(m, "BudgetExceeded",
                                                   PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ca::CapabilityError& e) {
      py::set_error(budget, e.what());
    } catch (const ca::InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<ca::Instance>(m, "Instance")
      .def_static(
          "parse",
          [](const std::string& text) {
            ca::ParsedInstance p = ca::ParseInstance(text);
            return ca::Parsed(std::move(p.instance), p.matching);
          },
          py::arg("text"),
          "Parse instance text; returns (instance, matching or None).")
      .def(
          "to_text",
          [](const ca::Instance& inst,
             const std::optional<ca::LabelPairs>& matching) {
            if (!matching) return ca::SerializeInstance(inst);
            const ca::Matching mm = ca::FromLabels(inst, *matching);
            return ca::SerializeInstance(inst, &mm);
          },
          py::arg("matching") = py::none())
      .def_property_readonly("students", &ca::StudentLabels)
      .def_property_readonly("courses",
                             [](const ca::Instance& inst) {
                               std::vector<std::string> out;
                               for (const auto& c : inst.courses) {
                                 out.push_back(c.label);
                               }
                               return out;
                             })
      .def_property_readonly("has_rules", &ca::Instance::HasRules)
      .def("__eq__", [](const ca::Instance& a, const ca::Instance& b) {
        return a == b;
      })
      .def("__repr__", [](const ca::Instance& inst) {
        return "<Instance students=" + std::to_string(inst.num_students()) +
               " courses=" + std::to_string(inst.num_courses()) + ">";
      });

  m.def("verify", &ca::VerifyPy, py::arg("instance"), py::arg("matching"),
        py::arg("notion"), py::arg("mode") = "auto",
        py::arg("exhaustive_cap") = ca::VerifyOptions{}.exhaustive_cap,
        "Blocking witness as a dict, or None if the matching is stable.");
  m.def("solve", &ca::SolvePy, py::arg("instance"),
        py::arg("algorithm") = "pair-size-da");
  m.def("matching_size", &ca::SizePy, py::arg("instance"), py::arg("matching"));
  m.def("max_stable", &ca::MaxStablePy, py::arg("instance"), py::arg("notion"),
        py::arg("lq") = "none",
        py::arg("node_cap") = ca::SearchOptions{}.node_cap,
        "Maximum-size stable matching as a dict, or None if none exists.");
  m.def("oracle", &ca::OraclePy, py::arg("instance"), py::arg("lq") = "none",
        py::arg("max_pairs") = ca::OracleOptions{}.max_pairs);
  m.def("generate", &ca::GeneratePy, py::arg("students"), py::arg("courses"),
        py::arg("seed"), py::arg("credits") = std::pair<ca::Credits, ca::Credits>{1, 2},
        py::arg("limits") = std::pair<ca::Credits, ca::Credits>{1, 4},
        py::arg("upper") = std::pair<int, int>{1, 2},
        py::arg("lower") = std::pair<int, int>{0, 0}, py::arg("density") = 0.6,
        py::arg("master_list") = false, py::arg("master_list_courses") = false,
        py::arg("rules") = 0);
  m.def(
      "reduce",
      [](const std::string& source, const std::string& text) {
        ca::Fixture f = ca::ReduceFromText(source, text);
        return ca::Parsed(std::move(f.instance), f.matching);
      },
      py::arg("source"), py::arg("text"),
      "Build an instance from a source problem; returns (instance, matching "
      "or None).");
}
