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

// Upper bounds on max-coverage through the minimum-cover dual.
//
// Every dual element b gets the value v_b = min_{a in N(b)} 1/|N(a)|, a unit
// fraction 1/d_b with d_b the largest degree among the primal neighbors of
// b. Both bounds scan the dual elements in increasing v_b order. All
// comparisons are done on the integer denominators, never on floats.

#ifndef SUBCERT_DUAL_COVERAGE_H_
#define SUBCERT_DUAL_COVERAGE_H_

#include <cstdint>
#include <vector>

#include "subcert/bipartite_graph.h"
#include "subcert/element_set.h"
#include "subcert/maximizers.h"

namespace subcert {

struct DualValues {
  // d_b per dual element; v_b = 1 / d_b.
  std::vector<int32_t> denominator;
  // Dual ids by increasing v_b (decreasing d_b), ties by dual id.
  std::vector<int32_t> order;

  double value(int32_t b) const { return 1.0 / denominator[b]; }
};

DualValues ComputeDualValues(const BipartiteGraph& g);

// Parts P_1..P_k over the sorted dual order. breakpoints[0] = 0 and part
// kappa covers sorted positions [breakpoints[kappa-1], breakpoints[kappa]).
struct CoveragePartition {
  std::vector<int64_t> breakpoints;
  // w(P) = |P| * max_{b in P} v_b as the exact fraction |P| / d.
  std::vector<int64_t> part_size;
  std::vector<int32_t> part_denominator;

  int64_t covered() const { return breakpoints.back(); }
};

// Method 1: i* = min{ i : sum_{j <= i} v_{b_j} > k } over the sorted order,
// or |D| + 1 when no prefix exceeds k. Every size-k solution covers at most
// i* - 1 dual elements.
int64_t AdditiveDualBound(const BipartiteGraph& g, int k);

// l(T) = sum_{b in T} v_b. Throws InvalidArgument on ids outside D.
double Ell(const BipartiteGraph& g, const ElementSet& t);

// Method 2: greedy valid partition with at most k parts; returns i_k, the
// number of dual elements absorbed. Every size-k solution covers at most
// i_k dual elements.
int64_t PartitionDualBound(const BipartiteGraph& g, int k,
                           CoveragePartition* partition = nullptr);

// g(T) = size of the smallest S c P with T c N(S), by enumeration in
// increasing |S|. Throws InfeasibleError when more than `cap` candidate
// covers would be examined.
int ExactMinCover(const BipartiteGraph& g, const ElementSet& t,
                  uint64_t cap = kDefaultEnumerationCap);

// max_{|S| <= k} |N(S)| by exhaustive search.
int64_t ExactMaxCoverage(const BipartiteGraph& g, int k,
                         uint64_t cap = kDefaultEnumerationCap);

}  // namespace subcert

#endif  // SUBCERT_DUAL_COVERAGE_H_
