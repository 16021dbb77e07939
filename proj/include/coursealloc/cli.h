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

#ifndef COURSEALLOC_CLI_H_
#define COURSEALLOC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace coursealloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;         // bad flags or bad input data
inline constexpr int kExitBudget = 3;        // a search or enumeration cap hit
inline constexpr int kExitUnstable = 10;     // verify found a witness
inline constexpr int kExitNoStable = 11;     // max found no stable matching

// `args` excludes the program name. FILE arguments of "-" read from `in`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace coursealloc::cli

#endif  // COURSEALLOC_CLI_H_
