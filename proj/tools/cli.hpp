// Copyright 2026 The LAQCC Authors
//
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

#ifndef LAQCC_TOOLS_CLI_HPP_
#define LAQCC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace laqcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

// args excludes the program name. JSON goes to out, summaries to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laqcc::cli

#endif  // LAQCC_TOOLS_CLI_HPP_
