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

// Cardinality-constrained maximizers.
//
// Tie rule everywhere: gains within kGainTieTolerance of the best are
// treated as equal and the lowest element id wins.

#ifndef SUBCERT_MAXIMIZERS_H_
#define SUBCERT_MAXIMIZERS_H_

#include <cstdint>
#include <vector>

#include "subcert/element_set.h"
#include "subcert/oracle.h"

namespace subcert {

inline constexpr double kGainTieTolerance = 1e-12;
inline constexpr double kSwapTolerance = 1e-9;
inline constexpr uint64_t kDefaultEnumerationCap = 5'000'000;

struct RandomSeed {
  uint64_t value = 0;
};

// Nested solutions S_0 = {} c S_1 c ... c S_L built one element at a time.
struct GreedyTrace {
  std::vector<ElementId> chosen;  // a_1..a_L
  std::vector<double> values;     // f(S_0)..f(S_L), size L + 1
  std::vector<double> gains;      // f_{S_{i-1}}(a_i), size L

  int length() const { return static_cast<int>(chosen.size()); }
  ElementSet Prefix(int i) const;
  double value(int i) const { return values.at(i); }
};

// Greedy with lazy (stale upper bound) evaluation. Produces exactly the
// trace of the naive scan for submodular oracles.
GreedyTrace Greedy(const Oracle& f, int kmax);
// Reference greedy that re-evaluates every gain each step.
GreedyTrace NaiveGreedy(const Oracle& f, int kmax);

// Swap local search started from the top-k singletons. First improvement
// in ascending (removed, added) id order, repeated until a full pass finds
// no swap improving by more than kSwapTolerance.
ElementSet LocalSearch(const Oracle& f, int k);

// Each step picks the best element of a uniform sample (without
// replacement) of size min(remaining, ceil(n ln(1/epsilon) / k)).
GreedyTrace SampleGreedy(const Oracle& f, int k, double epsilon,
                         RandomSeed seed);
int SampleGreedySampleSize(int n, int k, double epsilon);

// Each step picks uniformly among the k remaining elements of largest
// marginal gain.
GreedyTrace RandomGreedy(const Oracle& f, int k, RandomSeed seed);

struct ExactOptimum {
  ElementSet set;
  double value = 0.0;
};

// Exhaustive search over subsets of size <= k. Throws InfeasibleError when
// C(n, k) exceeds `cap`.
ExactOptimum BruteForceOpt(const Oracle& f, int k,
                           uint64_t cap = kDefaultEnumerationCap);

// C(n, k), saturating at UINT64_MAX.
uint64_t Binomial(int n, int k);

}  // namespace subcert

#endif  // SUBCERT_MAXIMIZERS_H_
