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

// Upper bounds on max_{|S| <= k} f(S) for monotone submodular f.
//
// The value-partition bound orders the ground set by decreasing singleton
// value, a_1, ..., a_n, with prefixes A_i = {a_1..a_i}, and splits the
// target value into parts v_1..v_k. Part j is the largest v such that the
// first prefix with f(A_i) - (v_1 + ... + v_{j-1}) >= v has f(a_i) >= v.
// No size-k set can reach more than v_1 + ... + v_k. One forward pass over
// the prefixes finds every part, so the cost is dominated by the sort.
//
// The pivoted bound (Dual) applies the same scan to f_S for each pivot S
// and keeps the smallest f(S) + bound(f_S).

#ifndef SUBCERT_DUAL_SUBMODULAR_H_
#define SUBCERT_DUAL_SUBMODULAR_H_

#include <string>
#include <vector>

#include "subcert/element_set.h"
#include "subcert/maximizers.h"
#include "subcert/oracle.h"

namespace subcert {

inline constexpr double kScanTolerance = 1e-9;

struct ValuePartition {
  std::vector<double> values;        // v_1..v_k
  std::vector<int64_t> witness;      // i_1 <= ... <= i_k, 1-based prefixes
  std::vector<ElementId> order;      // a_1..a_n
  std::vector<double> singleton;     // f(a_i) along `order`
  std::vector<double> prefix_value;  // f(A_0)..f(A_m) for the scanned part
  double total = 0.0;
};

struct ValuePartitionBound {
  double bound = 0.0;
  ValuePartition partition;
};

// Method 3 on f. For f({}) != 0 the scan runs on f - f({}) and f({}) is
// added back. Throws InvalidArgument when k > n.
ValuePartitionBound Method3(const Oracle& f, int k);

// Re-checks the witness conditions of a partition against `f` (normalized
// as in Method3). Returns an empty string when valid.
std::string CheckValuePartition(const Oracle& f, const ValuePartition& p,
                                double tolerance = 1e-7);

struct PivotBound {
  ElementSet pivot;
  double pivot_value = 0.0;    // f(S)
  double shifted_bound = 0.0;  // Method3(f_S, k)
};

struct UpperBoundCert {
  double bound = 0.0;
  std::string method;
  // -1 when the initial f(N) was never beaten.
  int best_pivot = -1;
  std::vector<PivotBound> pivots;
};

// min(f(N), min_{S in pivots} f(S) + Method3(f_S, k)). With num_threads > 1
// pivots are processed concurrently; the result does not depend on it.
UpperBoundCert Dual(const OraclePtr& f, int k,
                    const std::vector<ElementSet>& pivots,
                    int num_threads = 1);

// Same, for pivots that are prefixes of `trace`; f(S) is read from the
// trace instead of being re-evaluated.
UpperBoundCert DualFromTrace(const OraclePtr& f, int k,
                             const GreedyTrace& trace,
                             const std::vector<int>& prefix_sizes,
                             int num_threads = 1);

// Sizes {0, 1..20, 25, 30, .., 50}.
std::vector<int> DefaultPivotSchedule();

// Schedule entries no larger than the trace length. An empty schedule
// yields just the empty prefix.
std::vector<int> PivotSizes(const GreedyTrace& trace,
                            const std::vector<int>& schedule);

// Greedy prefixes for the default schedule, truncated to the trace.
std::vector<ElementSet> DefaultPivots(const GreedyTrace& trace);
std::vector<ElementSet> DefaultPivots(const GreedyTrace& trace,
                                      const std::vector<int>& schedule);

}  // namespace subcert

#endif  // SUBCERT_DUAL_SUBMODULAR_H_
