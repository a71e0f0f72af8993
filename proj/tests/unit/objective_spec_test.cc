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

#include "subcert/harness/objective_spec.h"

#include "gtest/gtest.h"
#include "subcert/error.h"
#include "subcert/maximizers.h"
#include "subcert/objectives.h"
#include "tests/testing/reference.h"

namespace subcert {
namespace {

const std::string kData = SUBCERT_TEST_DATA_DIR;

TEST(ParseObjectiveSpecTest, FamilyAndParams) {
  const ObjectiveSpec spec = ParseObjectiveSpec("random-bipartite:primal=8,p=0.3");
  EXPECT_EQ(spec.family, "random-bipartite");
  EXPECT_EQ(spec.params.at("primal"), "8");
  EXPECT_EQ(spec.params.at("p"), "0.3");
  EXPECT_EQ(spec.ToString(), "random-bipartite:p=0.3,primal=8");
  EXPECT_TRUE(ParseObjectiveSpec("adversarial").params.empty());
}

TEST(ParseObjectiveSpecTest, Errors) {
  EXPECT_THROW(ParseObjectiveSpec(":a=1"), InvalidArgument);
  EXPECT_THROW(ParseObjectiveSpec("x:a"), InvalidArgument);
  EXPECT_THROW(ParseObjectiveSpec("x:a=1,a=2"), InvalidArgument);
}

TEST(BuildObjectiveTest, FileFamilies) {
  const Objective cov = BuildObjective("coverage:path=" + kData + "/two_by_three.txt");
  ASSERT_TRUE(cov.graph);
  EXPECT_EQ(cov.oracle->Evaluate({0, 1}), 3.0);
  const Objective fac =
      BuildObjective("facility:path=" + kData + "/ratings.csv,header=true");
  EXPECT_EQ(fac.oracle->n(), 5);
  EXPECT_FALSE(fac.graph);
  const Objective ent =
      BuildObjective("entropy:path=" + kData + "/ratings.csv,header=true,label=0");
  EXPECT_EQ(ent.oracle->n(), 4);
  const Objective add = BuildObjective("additive:values=3;2;1");
  EXPECT_EQ(add.oracle->Evaluate({0, 2}), 4.0);
}

TEST(BuildObjectiveTest, GeneratorFamilies) {
  const Objective adv = BuildObjective("adversarial:c=10,k=5");
  EXPECT_EQ(Greedy(*adv.oracle, 5).values.back(), 18.0);

  const Objective g = BuildObjective("random-bipartite:primal=8,dual=10,p=0.3,seed=4");
  ASSERT_TRUE(g.graph);
  EXPECT_EQ(g.graph->primal_count(), 8);
  EXPECT_EQ(g.graph->dual_count(), 10);
  for (int32_t b = 0; b < 10; ++b) EXPECT_GE(g.graph->DualDegree(b), 1);

  const Objective d = BuildObjective("random-bipartite:primal=50,dual=80,degree=4");
  for (int32_t a = 0; a < 50; ++a) EXPECT_GE(d.graph->PrimalDegree(a), 4);
  for (int32_t b = 0; b < 80; ++b) EXPECT_GE(d.graph->DualDegree(b), 1);

  const Objective w = BuildObjective("random-bipartite:primal=8,dual=10,p=0.3,weighted=true");
  EXPECT_FALSE(w.graph);
  EXPECT_EQ(w.oracle->name(), "weighted-coverage");
}

TEST(BuildObjectiveTest, SameSeedSameOracle) {
  for (const std::string spec :
       {"random-bipartite:primal=10,dual=12,p=0.3", "random-ratings:users=20,items=10",
        "random-revenue:n=10", "random-entropy:rows=30,cols=10",
        "random-additive:n=10"}) {
    const Objective a = BuildObjective(spec, 42);
    const Objective b = BuildObjective(spec, 42);
    const Objective c = BuildObjective(spec, 43);
    const int n = a.oracle->n();
    bool differs = false;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask += 7) {
      const ElementSet s = testing::FromMask(mask, n);
      ASSERT_EQ(a.oracle->Evaluate(s), b.oracle->Evaluate(s)) << spec;
      differs |= a.oracle->Evaluate(s) != c.oracle->Evaluate(s);
    }
    EXPECT_TRUE(differs) << spec;
  }
}

TEST(BuildObjectiveTest, Errors) {
  EXPECT_THROW(BuildObjective("nope:x=1"), InvalidArgument);
  EXPECT_THROW(BuildObjective("random-additive:n=5,bogus=1"), InvalidArgument);
  EXPECT_THROW(BuildObjective("random-additive"), InvalidArgument);
  EXPECT_THROW(BuildObjective("random-bipartite:primal=5,dual=5"), InvalidArgument);
  EXPECT_THROW(BuildObjective("random-bipartite:primal=5,dual=5,p=0.5,degree=2"),
               InvalidArgument);
  EXPECT_THROW(BuildObjective("random-additive:n=abc"), InvalidArgument);
  EXPECT_THROW(BuildObjective("adversarial:c=2,k=3"), InvalidArgument);
  EXPECT_THROW(BuildObjective("coverage:path=/no/such/file"), ParseError);
}

TEST(SubsampleTest, RestrictsToChosenElements) {
  const Objective base = BuildObjective("random-ratings:users=30,items=20", 5);
  const Objective sub = Subsample(base, 6, 9);
  ASSERT_EQ(sub.oracle->n(), 6);
  const auto& restricted = static_cast<const RestrictedOracle&>(*sub.oracle);
  const ElementSet picked = ElementSet::FromUnsorted(restricted.ids());
  EXPECT_EQ(picked.size(), 6u);
  EXPECT_EQ(sub.oracle->Evaluate(ElementSet::Range(6)), base.oracle->Evaluate(picked));
  auto state = sub.oracle->NewState();
  state->Add(2);
  EXPECT_EQ(state->Value(), base.oracle->Evaluate({restricted.ids()[2]}));
  EXPECT_THROW(Subsample(base, 21, 1), InvalidArgument);
}

TEST(SubsampleTest, CoverageKeepsAGraph) {
  const Objective base = BuildObjective("random-bipartite:primal=30,dual=50,p=0.1", 5);
  const Objective sub = Subsample(base, 8, 2);
  ASSERT_TRUE(sub.graph);
  EXPECT_EQ(sub.graph->primal_count(), 8);
  for (int32_t b = 0; b < sub.graph->dual_count(); ++b) {
    EXPECT_GE(sub.graph->DualDegree(b), 1);
  }
  EXPECT_EQ(sub.oracle->Evaluate(ElementSet::Range(8)), sub.graph->dual_count());
}

}  // namespace
}  // namespace subcert
