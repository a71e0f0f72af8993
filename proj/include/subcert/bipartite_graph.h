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

#ifndef SUBCERT_BIPARTITE_GRAPH_H_
#define SUBCERT_BIPARTITE_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace subcert {

// Incidence structure between primal elements P (the ground set of a
// coverage function) and dual elements D (the covered universe). Both
// adjacency directions are stored in CSR form with sorted neighbor lists.
class BipartiteGraph {
 public:
  using Edge = std::pair<int32_t, int32_t>;  // (primal, dual)

  // Duplicate edges are collapsed; *duplicates receives how many were
  // dropped. Throws InvalidArgument on out-of-range ids or when a dual
  // element has no neighbor.
  static BipartiteGraph FromEdges(int32_t primal_count, int32_t dual_count,
                                  std::vector<Edge> edges,
                                  int64_t* duplicates = nullptr);

  int32_t primal_count() const { return primal_count_; }
  int32_t dual_count() const { return dual_count_; }
  int64_t edge_count() const {
    return static_cast<int64_t>(primal_adj_.size());
  }

  std::span<const int32_t> PrimalNeighbors(int32_t a) const {
    return {primal_adj_.data() + primal_off_[a],
            primal_adj_.data() + primal_off_[a + 1]};
  }
  std::span<const int32_t> DualNeighbors(int32_t b) const {
    return {dual_adj_.data() + dual_off_[b],
            dual_adj_.data() + dual_off_[b + 1]};
  }
  int32_t PrimalDegree(int32_t a) const {
    return static_cast<int32_t>(primal_off_[a + 1] - primal_off_[a]);
  }
  int32_t DualDegree(int32_t b) const {
    return static_cast<int32_t>(dual_off_[b + 1] - dual_off_[b]);
  }

 private:
  int32_t primal_count_ = 0;
  int32_t dual_count_ = 0;
  std::vector<int64_t> primal_off_;
  std::vector<int32_t> primal_adj_;
  std::vector<int64_t> dual_off_;
  std::vector<int32_t> dual_adj_;
};

}  // namespace subcert

#endif  // SUBCERT_BIPARTITE_GRAPH_H_
