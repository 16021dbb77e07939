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

// Human-readable and JSON renderings of results. JSON reports carry
// "schema": "coursealloc.report/1"; docs/report-schema.json describes them.

#ifndef COURSEALLOC_REPORT_H_
#define COURSEALLOC_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coursealloc/model.h"
#include "coursealloc/oracle.h"
#include "coursealloc/solve.h"
#include "coursealloc/verify.h"

namespace coursealloc {

inline constexpr const char* kReportSchema = "coursealloc.report/1";

// "s1 blocks with c1 dropping c3"; several courses are comma-separated and
// an empty drop set reads "dropping nothing".
std::string WitnessSummary(const Instance& inst, const BlockingWitness& w);

// One line per blocking condition, showing why the witness qualifies.
std::vector<std::string> WitnessConditions(const Instance& inst,
                                           const Matching& m,
                                           const BlockingWitness& w);

nlohmann::json MatchingJson(const Instance& inst, const Matching& m);
nlohmann::json WitnessJson(const Instance& inst, const Matching& m,
                           const BlockingWitness& w);

nlohmann::json VerifyReport(const Instance& inst, const Matching& m,
                            StabilityNotion notion, VerifyMode mode,
                            const VerifyResult& result);
std::string VerifyText(const Instance& inst, const Matching& m,
                       StabilityNotion notion, const VerifyResult& result);

nlohmann::json SolveReport(const Instance& inst, const Matching& m,
                           const std::string& algorithm);
std::string SolveText(const Instance& inst, const Matching& m);

nlohmann::json MaxReport(const Instance& inst, StabilityNotion notion,
                         LqMode lq,
                         const std::optional<StableSearchResult>& result);
std::string MaxText(const Instance& inst,
                    const std::optional<StableSearchResult>& result);

nlohmann::json OracleReport(const Instance& inst, LqMode lq,
                            const EnumerationReport& report);
std::string OracleText(const Instance& inst, const EnumerationReport& report);

nlohmann::json InstanceReport(const std::string& command,
                              const std::string& instance_text);

nlohmann::json ErrorReport(const std::string& command, int exit_code,
                           const std::string& message);

}  // namespace coursealloc

#endif  // COURSEALLOC_REPORT_H_
