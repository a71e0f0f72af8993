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

#include "subcert/objectives.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "subcert/error.h"
#include "subcert/maximizers.h"
#include "tests/testing/corpus.h"
#include "tests/testing/reference.h"

namespace subcert {
namespace {

using ::subcert::testing::FromMask;
using ::subcert::testing::TwoByThree;

TEST(CoverageOracleTest, CountsDistinctNeighbors) {
  CoverageOracle f(TwoByThree());
  EXPECT_EQ(f.Evaluate({0, 1}), 3.0);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_EQ(f.Evaluate({0}), 2.0);
  EXPECT_EQ(f.Count({1}), 2);
}

TEST(CoverageOracleTest, StateMatchesEvaluate) {
  auto g = std::make_shared<const BipartiteGraph>(RandomBipartite(9, 14, 0.3, 5));
  CoverageOracle f(g);
  auto state = f.NewState();
  ElementSet s;
  for (ElementId a : {4, 0, 7, 4, 2}) {
    const double before = state->Value();
    const double gain = state->Gain(a);
    state->Add(a);
    s.Insert(a);
    EXPECT_EQ(state->Value(), before + gain);
    EXPECT_EQ(state->Value(), f.Evaluate(s));
    EXPECT_EQ(state->Value(), testing::NaiveCoverage(*g, s));
  }
}

TEST(WeightedCoverageOracleTest, Examples) {
  WeightedCoverageOracle f(TwoByThree(), {2, 3, 5});
  EXPECT_EQ(f.Evaluate({0}), 5.0);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_EQ(f.Evaluate({0, 1}), 10.0);
  EXPECT_THROW(WeightedCoverageOracle(TwoByThree(), {1, 1}), InvalidArgument);
  EXPECT_THROW(WeightedCoverageOracle(TwoByThree(), {1, -1, 1}),
               InvalidArgument);
}

TEST(WeightedCoverageOracleTest, UnitWeightsEqualCoverageExhaustively) {
  for (const auto& g : testing::SmallGraphs(40, 8, 12, 11)) {
    CoverageOracle plain(g);
    WeightedCoverageOracle weighted(g, std::vector<double>(g->dual_count(), 1.0));
    const int n = g->primal_count();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      const ElementSet s = FromMask(mask, n);
      ASSERT_EQ(plain.Evaluate(s), weighted.Evaluate(s)) << s.ToString();
    }
  }
}

TEST(FacilityLocationOracleTest, Examples) {
  FacilityLocationOracle f(Matrix{{1, 2}, {3, 0}});
  EXPECT_DOUBLE_EQ(f.Evaluate({0}), 2.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({0, 1}), 2.5);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_THROW(FacilityLocationOracle(Matrix{}), InvalidArgument);
  EXPECT_THROW(FacilityLocationOracle(Matrix{{1, -2}}), InvalidArgument);
}

TEST(MovieRecommendationOracleTest, Examples) {
  MovieRecommendationOracle single(Matrix{{5}, {1}});
  EXPECT_DOUBLE_EQ(single.Evaluate({0}), 7.0);
  EXPECT_EQ(single.Evaluate({}), 0.0);
  MovieRecommendationOracle pair(Matrix{{5, 5}});
  EXPECT_DOUBLE_EQ(pair.Evaluate({0, 1}), 11.0);
}

TEST(ConcaveRatingsOracleTest, PowerOfMeanRatingSum) {
  ConcaveRatingsOracle f(Matrix{{4, 2}, {2, 2}}, 0.5);
  EXPECT_DOUBLE_EQ(f.Evaluate({0}), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(f.Evaluate({0, 1}), std::sqrt(5.0));
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_THROW(ConcaveRatingsOracle(Matrix{{1}}, 1.5), InvalidArgument);
}

TEST(RevenueOracleTest, Examples) {
  Matrix w{{1, 2, 0}, {0, 3, 1}, {4, 0, 0}};
  RevenueOracle linear(w, 1.0);
  EXPECT_DOUBLE_EQ(linear.Evaluate({0, 2}), 1 + 0 + 4 + 0 + 1 + 0);
  RevenueOracle root(Matrix{{1, 1}}, 0.5);
  EXPECT_DOUBLE_EQ(root.Evaluate({0, 1}), std::sqrt(2.0));
  EXPECT_EQ(root.Evaluate({}), 0.0);
  EXPECT_THROW(RevenueOracle(w, 0.0), InvalidArgument);
  EXPECT_THROW(RevenueOracle(w, 1.1), InvalidArgument);
}

TEST(EntropyOracleTest, Examples) {
  EntropyOracle coin(Matrix{{0}, {1}});
  EXPECT_DOUBLE_EQ(coin.Evaluate({0}), std::log(2.0));

  Matrix dup{{0, 0}, {1, 1}, {1, 1}, {2, 2}};
  EntropyOracle twins(dup);
  EXPECT_DOUBLE_EQ(twins.Evaluate({0, 1}), twins.Evaluate({0}));

  EntropyOracle independent(Matrix{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(independent.Evaluate({0, 1}), 2 * std::log(2.0));
  EXPECT_EQ(independent.Evaluate({}), 0.0);
  EXPECT_THROW(EntropyOracle(Matrix(0, 3)), InvalidArgument);
}

TEST(EntropyOracleTest, JointVariantStartsAtLabelEntropy) {
  EntropyOracle f(Matrix{{0, 1}, {1, 1}, {0, 0}, {1, 0}},
                  std::vector<double>{0, 0, 1, 1});
  EXPECT_DOUBLE_EQ(f.Evaluate({}), std::log(2.0));
  EXPECT_DOUBLE_EQ(f.Evaluate({1}), std::log(2.0));
  EXPECT_DOUBLE_EQ(f.Evaluate({0}), 2 * std::log(2.0));
}

TEST(EntropyOracleTest, PermutationInvariantInColumnOrder) {
  const Matrix obs = RandomObservations(30, 6, 3, 9);
  EntropyOracle f(obs);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ElementId> ids = {0, 1, 2, 3, 4, 5};
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(1 + trial % 6);
    auto forward = f.NewState();
    for (ElementId a : ids) forward->Add(a);
    auto backward = f.NewState();
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) backward->Add(*it);
    EXPECT_NEAR(forward->Value(), backward->Value(), 1e-12);
    EXPECT_NEAR(forward->Value(),
                f.Evaluate(ElementSet::FromUnsorted(ids)), 1e-12);
  }
}

TEST(AdditiveOracleTest, Examples) {
  AdditiveOracle f({3, 2, 1});
  EXPECT_EQ(f.Evaluate({0, 2}), 4.0);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_EQ(f.Evaluate(ElementSet::Range(3)), 6.0);
  EXPECT_THROW(AdditiveOracle({1, -1}), InvalidArgument);
}

TEST(AdversarialOracleTest, Examples) {
  const double c = 10;
  auto f = AdversarialInstance(20, c, 3);
  const ElementId g0 = f->block_size();
  EXPECT_EQ(f->Evaluate({0}), c);
  EXPECT_EQ(f->Evaluate({0, 1}), c + 1);
  EXPECT_EQ(f->Evaluate({g0}), c / 2);
  EXPECT_EQ(f->Evaluate({0, g0}) - f->Evaluate({0}), 2.0);
  EXPECT_EQ(Greedy(*f, 3).values.back(), c + 2 * (3 - 1));
  EXPECT_THROW(AdversarialOracle(5, 2.0), InvalidArgument);
}

TEST(ShiftedOracleTest, Examples) {
  auto base = std::make_shared<CoverageOracle>(TwoByThree());
  auto none = Shift(base, {});
  for (uint64_t mask = 0; mask < 4; ++mask) {
    EXPECT_EQ(none->Evaluate(FromMask(mask, 2)),
              base->Evaluate(FromMask(mask, 2)));
  }
  auto shifted = Shift(base, {0});
  EXPECT_EQ(shifted->Evaluate({1}), 1.0);
  EXPECT_EQ(shifted->Evaluate({0}), 0.0);
  EXPECT_EQ(shifted->NewState()->Value(), 0.0);
  EXPECT_THROW(Shift(base, {2}), InvalidArgument);
}

TEST(ShiftedOracleTest, ShiftIdentityHolds) {
  for (const auto& family : testing::CorpusFamilies()) {
    for (const auto& inst : testing::SmallCorpus(family, 20, 3)) {
      const int n = inst.oracle->n();
      std::mt19937_64 rng(7);
      for (int trial = 0; trial < 20; ++trial) {
        const ElementSet s = FromMask(rng() & ((uint64_t{1} << n) - 1), n);
        const ElementSet t = FromMask(rng() & ((uint64_t{1} << n) - 1), n);
        auto shifted = Shift(inst.oracle, s);
        const double whole = inst.oracle->Evaluate(s.Union(t));
        ASSERT_NEAR(shifted->Evaluate(t) + inst.oracle->Evaluate(s), whole,
                    1e-12 * std::max(1.0, std::abs(whole)))
            << inst.name;
      }
    }
  }
}

TEST(CountingOracleTest, CountsEvaluationsAndGains) {
  auto counter = std::make_shared<CountingOracle>(
      std::make_shared<AdditiveOracle>(std::vector<double>{1, 2, 3}));
  counter->Evaluate({0});
  auto state = counter->NewState();
  state->Gain(1);
  state->Add(1);
  EXPECT_GE(counter->count(), 2);
  counter->Reset();
  EXPECT_EQ(counter->count(), 0);
}

TEST(OracleStateTest, IncrementalValuesMatchEvaluateAcrossFamilies) {
  for (const auto& family : testing::CorpusFamilies()) {
    for (const auto& inst : testing::SmallCorpus(family, 10, 17)) {
      const int n = inst.oracle->n();
      auto state = inst.oracle->NewState();
      ElementSet s;
      for (int a = n - 1; a >= 0; a -= 2) {
        const double gain = state->Gain(a);
        const double before = state->Value();
        state->Add(a);
        s.Insert(a);
        ASSERT_NEAR(state->Value(), inst.oracle->Evaluate(s), 1e-9) << inst.name;
        ASSERT_NEAR(state->Value() - before, gain, 1e-9) << inst.name;
        ASSERT_EQ(state->Gain(a), 0.0) << inst.name;
      }
      auto copy = state->Clone();
      EXPECT_EQ(copy->Value(), state->Value());
    }
  }
}

}  // namespace
}  // namespace subcert
