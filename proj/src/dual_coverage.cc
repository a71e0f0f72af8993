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

#include "subcert/dual_coverage.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "subcert/error.h"
#include "subcert/objectives.h"

namespace subcert {

DualValues ComputeDualValues(const BipartiteGraph& g) {
  DualValues dv;
  dv.denominator.resize(g.dual_count());
  for (int32_t b = 0; b < g.dual_count(); ++b) {
    int32_t widest = 0;
    for (int32_t a : g.DualNeighbors(b)) {
      widest = std::max(widest, g.PrimalDegree(a));
    }
    if (widest == 0) {
      throw InvalidArgument("dual element " + std::to_string(b) +
                            " has no neighbor");
    }
    dv.denominator[b] = widest;
  }
  dv.order.resize(g.dual_count());
  std::iota(dv.order.begin(), dv.order.end(), 0);
  std::stable_sort(dv.order.begin(), dv.order.end(),
                   [&](int32_t x, int32_t y) {
                     return dv.denominator[x] > dv.denominator[y];
                   });
  return dv;
}

int64_t AdditiveDualBound(const BipartiteGraph& g, int k) {
  using boost::multiprecision::cpp_rational;
  if (k < 0) throw InvalidArgument("AdditiveDualBound: negative k");
  const DualValues dv = ComputeDualValues(g);
  const int64_t total = g.dual_count();
  cpp_rational prefix = 0;
  int64_t pos = 0;
  // Runs of equal denominator are consecutive in the sorted order.
  while (pos < total) {
    const int32_t d = dv.denominator[dv.order[pos]];
    int64_t run = 0;
    while (pos + run < total && dv.denominator[dv.order[pos + run]] == d) ++run;
    const cpp_rational with_run = prefix + cpp_rational(run, d);
    if (with_run > k) {
      // Smallest t with prefix + t/d > k is floor((k - prefix) d) + 1.
      const cpp_rational slack = (cpp_rational(k) - prefix) * d;
      const boost::multiprecision::cpp_int floor_slack =
          numerator(slack) / denominator(slack);
      return pos + static_cast<int64_t>(floor_slack) + 1;
    }
    prefix = with_run;
    pos += run;
  }
  return total + 1;
}

double Ell(const BipartiteGraph& g, const ElementSet& t) {
  t.CheckRange(g.dual_count());
  double sum = 0.0;
  for (ElementId b : t) {
    int32_t widest = 0;
    for (int32_t a : g.DualNeighbors(b)) {
      widest = std::max(widest, g.PrimalDegree(a));
    }
    sum += 1.0 / widest;
  }
  return sum;
}

int64_t PartitionDualBound(const BipartiteGraph& g, int k,
                           CoveragePartition* partition) {
  if (k < 0) throw InvalidArgument("PartitionDualBound: negative k");
  const DualValues dv = ComputeDualValues(g);
  const int64_t total = g.dual_count();
  // Sorted position i (1-based) holds dual element order[i - 1].
  auto denom_at = [&](int64_t i) { return dv.denominator[dv.order[i - 1]]; };
  CoveragePartition parts;
  parts.breakpoints.push_back(0);
  int64_t prev = 0;
  for (int kappa = 1; kappa <= k && prev < total; ++kappa) {
    // (i - prev) * v_{b_i} <= 1  <=>  i - prev <= d_{b_i}. The left side
    // grows and d shrinks along the order, so the predicate holds on a
    // prefix of positions and i = prev + 1 always qualifies.
    int64_t i = prev + 1;
    while (i < total && (i + 1 - prev) <= denom_at(i + 1)) ++i;
    parts.breakpoints.push_back(i);
    parts.part_size.push_back(i - prev);
    parts.part_denominator.push_back(denom_at(i));
    prev = i;
  }
  if (partition) *partition = std::move(parts);
  return prev;
}

int ExactMinCover(const BipartiteGraph& g, const ElementSet& t, uint64_t cap) {
  t.CheckRange(g.dual_count());
  if (t.empty()) return 0;
  // Bitsets over the positions of T.
  const size_t words = (t.size() + 63) / 64;
  std::vector<int32_t> position(g.dual_count(), -1);
  for (size_t i = 0; i < t.size(); ++i) position[t.ids()[i]] = static_cast<int32_t>(i);
  std::vector<std::vector<uint64_t>> masks;
  for (int32_t a = 0; a < g.primal_count(); ++a) {
    std::vector<uint64_t> mask(words, 0);
    bool useful = false;
    for (int32_t b : g.PrimalNeighbors(a)) {
      if (position[b] >= 0) {
        mask[position[b] / 64] |= uint64_t{1} << (position[b] % 64);
        useful = true;
      }
    }
    if (useful) masks.push_back(std::move(mask));
  }
  std::vector<uint64_t> full(words, ~uint64_t{0});
  if (t.size() % 64) full.back() = (uint64_t{1} << (t.size() % 64)) - 1;

  const int m = static_cast<int>(masks.size());
  uint64_t examined = 0;
  std::vector<std::vector<uint64_t>> acc;
  // Depth-first over combinations of exactly `size` masks.
  auto covers = [&](auto&& self, int size, int depth, int start) -> bool {
    for (int a = start; a <= m - (size - depth); ++a) {
      std::vector<uint64_t>& cur = acc[depth + 1];
      for (size_t w = 0; w < words; ++w) cur[w] = acc[depth][w] | masks[a][w];
      if (depth + 1 == size) {
        if (++examined > cap) {
          throw InfeasibleError("ExactMinCover: enumeration cap " +
                                std::to_string(cap) + " exceeded");
        }
        if (cur == full) return true;
      } else if (self(self, size, depth + 1, a + 1)) {
        return true;
      }
    }
    return false;
  };
  for (int size = 1; size <= m; ++size) {
    acc.assign(size + 1, std::vector<uint64_t>(words, 0));
    if (covers(covers, size, 0, 0)) return size;
  }
  throw InvalidArgument("ExactMinCover: target is not coverable");
}

int64_t ExactMaxCoverage(const BipartiteGraph& g, int k, uint64_t cap) {
  const CoverageOracle f(std::make_shared<const BipartiteGraph>(g));
  const ExactOptimum opt = BruteForceOpt(f, k, cap);
  return f.Count(opt.set);
}

}  // namespace subcert
