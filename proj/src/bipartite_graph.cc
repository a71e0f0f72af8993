// Copyright 2026 The Authors.
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

#include "subcert/bipartite_graph.h"

#include <algorithm>
#include <string>

#include "subcert/error.h"

namespace subcert {

BipartiteGraph BipartiteGraph::FromEdges(int32_t primal_count,
                                         int32_t dual_count,
                                         std::vector<Edge> edges,
                                         int64_t* duplicates) {
  if (primal_count < 1 || dual_count < 1) {
    throw InvalidArgument("bipartite graph needs |P| >= 1 and |D| >= 1");
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= primal_count || b < 0 || b >= dual_count) {
      throw InvalidArgument("edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  const size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (duplicates) *duplicates = static_cast<int64_t>(before - edges.size());

  BipartiteGraph g;
  g.primal_count_ = primal_count;
  g.dual_count_ = dual_count;
  g.primal_off_.assign(primal_count + 1, 0);
  g.dual_off_.assign(dual_count + 1, 0);
  for (const auto& [a, b] : edges) {
    ++g.primal_off_[a + 1];
    ++g.dual_off_[b + 1];
  }
  for (int32_t a = 0; a < primal_count; ++a) {
    g.primal_off_[a + 1] += g.primal_off_[a];
  }
  for (int32_t b = 0; b < dual_count; ++b) {
    if (g.dual_off_[b + 1] == 0) {
      throw InvalidArgument("dual element " + std::to_string(b) +
                            " has no neighbor");
    }
    g.dual_off_[b + 1] += g.dual_off_[b];
  }
  // Edges are sorted by (a, b), so primal lists come out sorted; dual lists
  // are filled in increasing a and are sorted as well.
  g.primal_adj_.resize(edges.size());
  g.dual_adj_.resize(edges.size());
  std::vector<int64_t> pos(g.dual_off_.begin(), g.dual_off_.end() - 1);
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& [a, b] = edges[e];
    g.primal_adj_[e] = b;
    g.dual_adj_[pos[b]++] = a;
  }
  return g;
}

}  // namespace subcert
