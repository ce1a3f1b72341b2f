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

#include <cstdlib>
#include <iostream>
#include <string>

#include "laqcc/acceptance.hpp"

int main(int argc, char** argv) {
  laqcc::AcceptanceOptions o;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--max-n") o.max_n = std::atoi(argv[i + 1]);
    if (flag == "--seed") o.seed = std::strtoull(argv[i + 1], nullptr, 10);
  }
  int failed = 0;
  laqcc::run_acceptance(o, [&](const laqcc::CriterionResult& r) {
    std::cout << laqcc::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (laqcc::kAcceptanceCriteria - failed) << "/" << laqcc::kAcceptanceCriteria << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
