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

// Baseline bounds and greedy guarantees to compare against Dual.
//
// TopkBound and MarginalBound are upper bounds on the optimum. Curvature and
// sharpness instead give a guaranteed fraction of the optimum that greedy
// reaches; they are reported as ratios, not as bounds.

#ifndef SUBCERT_BENCHMARKS_H_
#define SUBCERT_BENCHMARKS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "subcert/element_set.h"
#include "subcert/maximizers.h"
#include "subcert/oracle.h"

namespace subcert {

// f({}) plus the k largest marginals f_{}(a).
double TopkBound(const Oracle& f, int k);

// min over 0 <= i < j <= L of
//   (f(S_j) - r^{j-i} f(S_i)) / (1 - r^{j-i}),  r = 1 - 1/k,
// for a greedy trace of length L >= 1. Pairs with denominator below 1e-12
// are skipped.
double MarginalBound(const GreedyTrace& trace, int k);

enum class CurvatureMode { kExact, kHeuristic };

struct CurvatureEstimate {
  double c = 0.0;
  CurvatureMode mode = CurvatureMode::kExact;
  double guarantee = 1.0;  // (1 - e^{-c}) / c
};

double CurvatureGuarantee(double c);

// c = 1 - min over S and a not in S of f_S(a) / f_{}(a), over every subset
// S. Elements with f_{}(a) = 0 are left out. Throws InfeasibleError when
// 2^n exceeds `cap`.
CurvatureEstimate CurvatureExact(const Oracle& f,
                                 uint64_t cap = kDefaultEnumerationCap);

// Picks a* maximizing 1 - f_{N-a}(a) / f(a), then greedily adds up to k
// other elements minimizing f_S(a*) and reports c(S) = 1 - f_S(a*)/f(a*).
// A lower bound on the exact curvature. Throws InvalidArgument when every
// singleton is zero.
CurvatureEstimate CurvatureHeuristic(const Oracle& f, int k);

struct SharpnessProfile {
  std::vector<double> c;
  std::vector<double> theta;
  double opt = 0.0;
  ElementSet opt_set;
  double guarantee = 0.0;
};

// 1 - (((1 - t0/(c0 k))^{t1/t0} - t1/(c1 k))^{t2/t1} - ... - t_{k-1}/(c_{k-1} k))^{1/t_{k-1}}.
// Computed in log1p/expm1 form. Returns 1 once the inner base reaches 0.
double NestedSharpnessGuarantee(const std::vector<double>& c,
                                const std::vector<double>& theta, int k);

// Dynamic sharpness search with c_i on the grid 1.00, 1.01, .., 3.00 and
//   theta(c) = min_{|S| <= k} log(k c W2(S) / W(S)) / log(OPT / W(S)),
// W(S) = OPT - f(S), W2(S) = max_{a in O \ S} f_S(a), clamped into (0, 1].
// Runs on f - f({}). Throws InfeasibleError when the number of subsets of
// size <= k exceeds `cap`, InvalidArgument when OPT is 0.
SharpnessProfile SharpnessGuarantee(const Oracle& f, int k,
                                    uint64_t cap = kDefaultEnumerationCap);

}  // namespace subcert

#endif  // SUBCERT_BENCHMARKS_H_
