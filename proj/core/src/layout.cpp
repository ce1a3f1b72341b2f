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

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

#include "laqcc/error.hpp"
#include "laqcc/program.hpp"

namespace laqcc {

GridLayout GridLayout::line(int n) {
  GridLayout g;
  for (int q = 0; q < n; ++q) g.coords[q] = {0, q};
  return g;
}

namespace {

bool adjacent(std::pair<int, int> a, std::pair<int, int> b) {
  return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1;
}

bool connected(const std::vector<std::pair<int, int>>& sites) {
  if (sites.empty()) return true;
  std::vector<uint8_t> seen(sites.size(), 0);
  std::queue<size_t> bfs;
  bfs.push(0);
  seen[0] = 1;
  size_t count = 1;
  while (!bfs.empty()) {
    const size_t i = bfs.front();
    bfs.pop();
    for (size_t j = 0; j < sites.size(); ++j) {
      if (!seen[j] && adjacent(sites[i], sites[j])) {
        seen[j] = 1;
        ++count;
        bfs.push(j);
      }
    }
  }
  return count == sites.size();
}

}  // namespace

std::vector<LayoutViolation> validate_layout(const LaqccProgram& p, const GridLayout& layout) {
  std::set<std::pair<int, int>> used;
  for (const auto& [q, c] : layout.coords) {
    if (!used.insert(c).second) throw LayoutError("two qubits share a grid site");
  }
  for (Qubit q = 0; q < p.num_qubits(); ++q) {
    if (!layout.coords.count(q)) throw LayoutError("layout has no site for qubit " + std::to_string(q));
  }
  std::vector<LayoutViolation> out;
  const auto& layers = p.layers();
  for (size_t li = 0; li < layers.size(); ++li) {
    const auto* ql = std::get_if<QuantumLayer>(&layers[li]);
    if (ql == nullptr) continue;
    for (size_t oi = 0; oi < ql->ops.size(); ++oi) {
      const auto sup = ql->ops[oi].support();
      if (sup.size() < 2) continue;
      std::vector<std::pair<int, int>> sites;
      for (Qubit q : sup) sites.push_back(layout.coords.at(q));
      if (sup.size() == 2 && !adjacent(sites[0], sites[1])) {
        out.push_back({li, oi, sup, "two-qubit operation " + ql->ops[oi].name() + " on non-adjacent sites"});
      } else if (sup.size() > 2 && !connected(sites)) {
        out.push_back({li, oi, sup, "operation " + ql->ops[oi].name() + " spans a disconnected region"});
      }
    }
  }
  return out;
}

}  // namespace laqcc
