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

#include "subcert/benchmarks.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "subcert/error.h"
#include "subcert/maximizers.h"
#include "subcert/objectives.h"
#include "tests/testing/corpus.h"
#include "tests/testing/reference.h"

namespace subcert {
namespace {

using ::subcert::testing::BruteMax;
using ::subcert::testing::CorpusFamilies;
using ::subcert::testing::SmallCorpus;
using ::subcert::testing::TwoByThree;

const double kOneMinusInvE = 1.0 - std::exp(-1.0);

TEST(TopkBoundTest, Examples) {
  EXPECT_EQ(TopkBound(AdditiveOracle({3, 2, 1}), 2), 5.0);
  EXPECT_EQ(TopkBound(CoverageOracle(TwoByThree()), 2), 4.0);
  for (const auto& inst : SmallCorpus("revenue", 20, 1)) {
    const int n = inst.oracle->n();
    double singles = 0.0;
    for (ElementId a = 0; a < n; ++a) singles += inst.oracle->Singleton(a);
    EXPECT_NEAR(TopkBound(*inst.oracle, n), singles, 1e-9);
    EXPECT_GE(singles, inst.oracle->Evaluate(ElementSet::Range(n)) - 1e-9);
  }
}

TEST(MarginalBoundTest, Examples) {
  for (const auto& inst : SmallCorpus("coverage", 20, 2)) {
    const GreedyTrace trace = Greedy(*inst.oracle, 1);
    EXPECT_EQ(MarginalBound(trace, 1), trace.value(1));
  }
  AdditiveOracle f({5, 4, 4, 1, 1});
  const int k = 3;
  const GreedyTrace trace = Greedy(f, k);
  const double classic = trace.value(k) / (1 - std::pow(1 - 1.0 / k, k));
  EXPECT_LE(MarginalBound(trace, k), classic + 1e-12);
  EXPECT_GE(MarginalBound(trace, k), trace.value(k));
  EXPECT_THROW(MarginalBound(Greedy(f, 0), 1), InvalidArgument);
}

TEST(MarginalBoundTest, MatchesDirectMinimumOverPairs) {
  for (const auto& inst : SmallCorpus("facility", 20, 3)) {
    const int n = inst.oracle->n();
    const GreedyTrace trace = Greedy(*inst.oracle, n);
    for (int k = 1; k <= n; ++k) {
      double direct = INFINITY;
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const double r = std::pow(1.0 - 1.0 / k, j - i);
          if (1 - r < 1e-12) continue;
          direct = std::min(direct, (trace.value(j) - r * trace.value(i)) / (1 - r));
        }
      }
      EXPECT_NEAR(MarginalBound(trace, k), direct, 1e-9);
    }
  }
}

TEST(BenchmarkBoundsTest, SoundOnCorpus) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 40, 4)) {
      const Oracle& f = *inst.oracle;
      for (int k = 1; k <= std::min(5, static_cast<int>(f.n())); ++k) {
        const double opt = BruteMax(f, k);
        const double tol = 1e-6 * std::max(1.0, opt);
        EXPECT_GE(TopkBound(f, k), opt - tol) << inst.name;
        EXPECT_GE(MarginalBound(Greedy(f, k), k), opt - tol) << inst.name;
        EXPECT_GE(MarginalBound(Greedy(f, f.n()), k), opt - tol) << inst.name;
      }
    }
  }
}

TEST(CurvatureTest, Examples) {
  const CurvatureEstimate additive = CurvatureExact(AdditiveOracle({3, 2, 1}));
  EXPECT_EQ(additive.c, 0.0);
  EXPECT_EQ(additive.guarantee, 1.0);
  EXPECT_EQ(CurvatureHeuristic(AdditiveOracle({3, 2, 1}), 2).c, 0.0);

  CoverageOracle two(TwoByThree());
  EXPECT_DOUBLE_EQ(CurvatureExact(two).c, 0.5);

  // Element 2 covers nothing that 0 and 1 miss.
  CoverageOracle overlap(std::make_shared<const BipartiteGraph>(
      BipartiteGraph::FromEdges(3, 2, {{0, 0}, {1, 1}, {2, 0}, {2, 1}})));
  EXPECT_EQ(CurvatureExact(overlap).c, 1.0);
  EXPECT_EQ(CurvatureHeuristic(overlap, 2).c, 1.0);
  EXPECT_DOUBLE_EQ(CurvatureExact(overlap).guarantee, 1.0 - std::exp(-1.0));
}

TEST(CurvatureTest, GuaranteeFormula) {
  EXPECT_EQ(CurvatureGuarantee(0.0), 1.0);
  EXPECT_EQ(CurvatureGuarantee(1e-10), 1.0);
  EXPECT_NEAR(CurvatureGuarantee(0.5), (1 - std::exp(-0.5)) / 0.5, 1e-15);
  for (double c = 0.0; c <= 1.0; c += 0.01) {
    EXPECT_GE(CurvatureGuarantee(c), kOneMinusInvE - 1e-12);
    EXPECT_LE(CurvatureGuarantee(c), 1.0);
    EXPECT_GE(CurvatureGuarantee(c), CurvatureGuarantee(c + 0.01));
  }
}

TEST(CurvatureTest, ExactMatchesClosedFormAndBoundsHeuristic) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 25, 5)) {
      const Oracle& f = *inst.oracle;
      double top = 0.0;
      for (ElementId a = 0; a < f.n(); ++a) top = std::max(top, f.Evaluate({a}));
      if (top == 0.0) {
        EXPECT_THROW(CurvatureHeuristic(f, 1), InvalidArgument);
        continue;
      }
      const CurvatureEstimate exact = CurvatureExact(f);
      EXPECT_EQ(exact.mode, CurvatureMode::kExact);
      EXPECT_NEAR(exact.c, testing::ClosedFormCurvature(f), 1e-9) << inst.name;
      for (int k = 1; k <= std::min(5, static_cast<int>(f.n())); ++k) {
        const CurvatureEstimate heuristic = CurvatureHeuristic(f, k);
        EXPECT_EQ(heuristic.mode, CurvatureMode::kHeuristic);
        EXPECT_LE(heuristic.c, exact.c + 1e-9) << inst.name;
        EXPECT_GE(heuristic.guarantee, exact.guarantee - 1e-12);
        EXPECT_GE(heuristic.c, 0.0);
      }
    }
  }
}

TEST(CurvatureTest, Errors) {
  EXPECT_THROW(CurvatureExact(AdditiveOracle(std::vector<double>(30, 1.0)), 1000),
               InfeasibleError);
  EXPECT_THROW(CurvatureHeuristic(AdditiveOracle({0, 0}), 1), InvalidArgument);
}

TEST(SharpnessTest, EqualParametersTelescope) {
  const int k = 50;
  for (double theta : {1.0, 0.5, 0.1, 1e-4}) {
    const std::vector<double> c(k, 1.0), th(k, theta);
    const double expected = 1.0 - std::pow(1.0 - theta, 1.0 / theta);
    EXPECT_NEAR(NestedSharpnessGuarantee(c, th, k), expected, 1e-9);
    EXPECT_NEAR(NestedSharpnessGuarantee(c, th, k),
                testing::DirectSharpness(c, th, k), 1e-9);
  }
  const std::vector<double> c(k, 1.0), th(k, 1e-4);
  EXPECT_NEAR(NestedSharpnessGuarantee(c, th, k), kOneMinusInvE, 1e-3);
}

TEST(SharpnessTest, NestedFormulaMatchesDirectEvaluation) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> cs(1.0, 3.0), ts(0.05, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 8;
    std::vector<double> c(k), th(k);
    for (int i = 0; i < k; ++i) {
      c[i] = cs(rng);
      th[i] = ts(rng);
    }
    const double direct = testing::DirectSharpness(c, th, k);
    if (!std::isfinite(direct)) continue;
    EXPECT_NEAR(NestedSharpnessGuarantee(c, th, k), direct, 1e-9);
  }
}

TEST(SharpnessTest, ProfilesOnCorpus) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 15, 7)) {
      const Oracle& f = *inst.oracle;
      for (int k = 1; k <= std::min(4, static_cast<int>(f.n())); ++k) {
        if (BruteMax(f, k) <= f.Evaluate({})) continue;
        const SharpnessProfile p = SharpnessGuarantee(f, k);
        EXPECT_NEAR(p.opt, BruteMax(f, k), 1e-9);
        ASSERT_EQ(p.c.size(), static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
          EXPECT_GE(p.c[i], 1.0);
          EXPECT_LE(p.c[i], 3.0);
          EXPECT_GT(p.theta[i], 0.0);
          EXPECT_LE(p.theta[i], 1.0);
        }
        EXPECT_GE(p.guarantee, kOneMinusInvE - 1e-9) << inst.name;
        EXPECT_LE(p.guarantee, 1.0);
        EXPECT_NEAR(p.guarantee, NestedSharpnessGuarantee(p.c, p.theta, k), 0);
      }
    }
  }
}

TEST(SharpnessTest, Errors) {
  EXPECT_THROW(SharpnessGuarantee(AdditiveOracle({0, 0, 0}), 2), InvalidArgument);
  EXPECT_THROW(SharpnessGuarantee(AdditiveOracle(std::vector<double>(40, 1)), 10,
                                  1000),
               InfeasibleError);
  EXPECT_THROW(NestedSharpnessGuarantee({1.0}, {1.0}, 2), InvalidArgument);
}

}  // namespace
}  // namespace subcert
