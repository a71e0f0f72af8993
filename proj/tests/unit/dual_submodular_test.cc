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

#include "subcert/dual_submodular.h"

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
using ::subcert::testing::FromMask;
using ::subcert::testing::SmallCorpus;

double Tol(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

TEST(Method3Test, Examples) {
  AdditiveOracle additive({3, 2, 1});
  const ValuePartitionBound m = Method3(additive, 2);
  EXPECT_EQ(m.partition.values, (std::vector<double>{3, 2}));
  EXPECT_EQ(m.bound, 5.0);

  auto adversarial = AdversarialInstance(300, 20, 10);
  EXPECT_DOUBLE_EQ(Method3(*adversarial, 10).bound, 200.0);

  for (const auto& inst : SmallCorpus("entropy", 10, 1)) {
    double best = 0.0;
    for (ElementId a = 0; a < inst.oracle->n(); ++a) {
      best = std::max(best, inst.oracle->Singleton(a));
    }
    EXPECT_NEAR(Method3(*inst.oracle, 1).bound, best, 1e-12);
  }
  EXPECT_THROW(Method3(additive, 4), InvalidArgument);
}

TEST(Method3Test, ExhaustedScanStopsAtFullValue) {
  // Three copies of the same two duals: f(N) = 2 while singletons are 2.
  auto g = std::make_shared<const BipartiteGraph>(BipartiteGraph::FromEdges(
      3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}}));
  CoverageOracle f(g);
  const ValuePartitionBound m = Method3(f, 3);
  EXPECT_EQ(m.bound, 2.0);
  EXPECT_EQ(m.partition.values, (std::vector<double>{2, 0, 0}));
  EXPECT_EQ(CheckValuePartition(f, m.partition), "");
}

TEST(Method3Test, ConstantOffsetIsCarriedThrough) {
  EntropyOracle labelled(RandomObservations(20, 6, 3, 5),
                         [] {
                           std::vector<double> y(20);
                           for (int i = 0; i < 20; ++i) y[i] = i % 3;
                           return y;
                         }());
  for (int k = 1; k <= 6; ++k) {
    EXPECT_NEAR(Method3(labelled, k).bound,
                testing::DefinitionalMethod3(labelled, k), 1e-9);
    EXPECT_GE(Method3(labelled, k).bound, BruteMax(labelled, k) - 1e-9);
  }
}

TEST(Method3Test, MatchesDefinitionalReference) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 60, 2)) {
      for (int k = 1; k <= inst.oracle->n(); ++k) {
        ASSERT_NEAR(Method3(*inst.oracle, k).bound,
                    testing::DefinitionalMethod3(*inst.oracle, k), 1e-7)
            << inst.name << " k=" << k;
      }
    }
  }
}

TEST(Method3Test, SoundMonotoneInKAndBelowFullValue) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 60, 3)) {
      const Oracle& f = *inst.oracle;
      const double full = f.Evaluate(ElementSet::Range(f.n()));
      double previous = f.Evaluate({});
      for (int k = 1; k <= std::min(5, static_cast<int>(f.n())); ++k) {
        const double bound = Method3(f, k).bound;
        const double opt = BruteMax(f, k);
        EXPECT_GE(bound, opt - Tol(opt)) << inst.name << " k=" << k;
        EXPECT_GE(bound, previous - 1e-12) << inst.name << " k=" << k;
        EXPECT_LE(bound, full + 1e-9) << inst.name << " k=" << k;
        previous = bound;
      }
    }
  }
}

TEST(Method3Test, EmittedPartitionsAreValid) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 40, 4)) {
      for (int k = 1; k <= inst.oracle->n(); ++k) {
        const ValuePartition p = Method3(*inst.oracle, k).partition;
        ASSERT_EQ(p.values.size(), static_cast<size_t>(k));
        EXPECT_EQ(CheckValuePartition(*inst.oracle, p), "")
            << inst.name << " k=" << k;
      }
    }
  }
}

TEST(Method3Test, CheckerRejectsTamperedPartitions) {
  AdditiveOracle f({3, 2, 1});
  ValuePartition p = Method3(f, 2).partition;
  ValuePartition inflated = p;
  inflated.values[1] += 0.5;
  inflated.total += 0.5;
  EXPECT_NE(CheckValuePartition(f, inflated), "");
  ValuePartition reordered = p;
  reordered.witness = {2, 1};
  EXPECT_NE(CheckValuePartition(f, reordered), "");
  ValuePartition wrong_total = p;
  wrong_total.total = 1.0;
  EXPECT_NE(CheckValuePartition(f, wrong_total), "");
}

TEST(Method3Test, LargeInstanceTouchesOnlyNeededPrefixes) {
  auto g = std::make_shared<const BipartiteGraph>(
      RandomBipartiteByDegree(5000, 20000, 8, 3));
  auto f = std::make_shared<CountingOracle>(std::make_shared<CoverageOracle>(g));
  const ValuePartitionBound m = Method3(*f, 10);
  EXPECT_LE(m.partition.prefix_value.size(), 5001u);
  EXPECT_GE(m.bound, Greedy(*f, 10).values.back());
}

TEST(DualTest, Examples) {
  for (const auto& inst : SmallCorpus("facility", 10, 5)) {
    const double full = inst.oracle->Evaluate(ElementSet::Range(inst.oracle->n()));
    const UpperBoundCert empty = Dual(inst.oracle, 2, {ElementSet{}});
    EXPECT_EQ(empty.bound, std::min(full, Method3(*inst.oracle, 2).bound));
    const UpperBoundCert everything =
        Dual(inst.oracle, 2, {ElementSet::Range(inst.oracle->n())});
    EXPECT_EQ(everything.bound, full);
  }

  const int k = 10;
  auto adversarial = AdversarialInstance(300, 20, k);
  const GreedyTrace trace = Greedy(*adversarial, k);
  const UpperBoundCert cert =
      Dual(adversarial, k, DefaultPivots(trace, {1, k}));
  EXPECT_LE(cert.bound, trace.values.back() + 2 * k);
  EXPECT_LT(cert.bound, 0.5 * Method3(*adversarial, k).bound);
}

TEST(DualTest, SoundForArbitraryPivotsAndMonotoneInPivots) {
  std::mt19937_64 rng(6);
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 30, 7)) {
      const int n = inst.oracle->n();
      for (int k = 1; k <= std::min(5, n); ++k) {
        const double opt = BruteMax(*inst.oracle, k);
        std::vector<ElementSet> pivots;
        double previous = inst.oracle->Evaluate(ElementSet::Range(n));
        for (int r = 0; r < 6; ++r) {
          pivots.push_back(FromMask(rng() & ((uint64_t{1} << n) - 1), n));
          const double bound = Dual(inst.oracle, k, pivots).bound;
          EXPECT_GE(bound, opt - Tol(opt)) << inst.name << " k=" << k;
          EXPECT_LE(bound, previous) << inst.name << " k=" << k;
          previous = bound;
        }
      }
    }
  }
}

TEST(DualTest, GreedyPrefixGivesFactorTwoCertificate) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 40, 8)) {
      const int n = inst.oracle->n();
      const GreedyTrace trace = Greedy(*inst.oracle, n);
      for (int k = 1; k <= n; ++k) {
        const UpperBoundCert cert =
            DualFromTrace(inst.oracle, k, trace, {0, k});
        EXPECT_LE(cert.bound, 2 * trace.value(k) + 1e-9)
            << inst.name << " k=" << k;
      }
    }
  }
}

TEST(DualTest, TraceCachingAndThreadsAgreeWithPlainDual) {
  for (const auto& family : CorpusFamilies()) {
    for (const auto& inst : SmallCorpus(family, 10, 9)) {
      const int n = inst.oracle->n();
      const GreedyTrace trace = Greedy(*inst.oracle, n);
      const std::vector<int> sizes = PivotSizes(trace, DefaultPivotSchedule());
      for (int k = 1; k <= std::min(4, n); ++k) {
        const UpperBoundCert a = Dual(inst.oracle, k, DefaultPivots(trace));
        const UpperBoundCert b = DualFromTrace(inst.oracle, k, trace, sizes, 1);
        const UpperBoundCert c = DualFromTrace(inst.oracle, k, trace, sizes, 4);
        EXPECT_NEAR(a.bound, b.bound, 1e-9);
        EXPECT_EQ(b.bound, c.bound);
        EXPECT_EQ(b.best_pivot, c.best_pivot);
        ASSERT_EQ(b.pivots.size(), sizes.size());
      }
    }
  }
}

TEST(DualTest, RejectsBadInput) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<double>{1, 2, 3});
  EXPECT_THROW(Dual(f, 1, {ElementSet{3}}), InvalidArgument);
  EXPECT_THROW(Dual(f, 4, {ElementSet{}}), InvalidArgument);
  const GreedyTrace trace = Greedy(*f, 2);
  EXPECT_THROW(DualFromTrace(f, 1, trace, {3}), InvalidArgument);
}

TEST(DefaultPivotsTest, ScheduleAndTruncation) {
  const std::vector<int> schedule = DefaultPivotSchedule();
  EXPECT_EQ(schedule.size(), 27u);

  AdditiveOracle small(std::vector<double>(12, 1.0));
  const std::vector<ElementSet> twelve = DefaultPivots(Greedy(small, 12));
  ASSERT_EQ(twelve.size(), 13u);
  for (size_t i = 0; i < twelve.size(); ++i) EXPECT_EQ(twelve[i].size(), i);

  AdditiveOracle big(std::vector<double>(60, 1.0));
  const std::vector<ElementSet> full = DefaultPivots(Greedy(big, 60));
  EXPECT_EQ(full.size(), 27u);
  EXPECT_EQ(full.back().size(), 50u);

  const std::vector<ElementSet> none = DefaultPivots(Greedy(big, 60), {});
  ASSERT_EQ(none.size(), 1u);
  EXPECT_TRUE(none[0].empty());
}

}  // namespace
}  // namespace subcert
