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

#include "subcert/validity.h"

#include <cmath>
#include <functional>

#include "gtest/gtest.h"
#include "subcert/error.h"
#include "subcert/harness/objective_spec.h"
#include "subcert/objectives.h"
#include "tests/testing/corpus.h"

namespace subcert {
namespace {

// Oracle over a plain function of |S|.
class CardinalityOracle final : public Oracle {
 public:
  CardinalityOracle(ElementId n, std::function<double(int)> g)
      : n_(n), g_(std::move(g)) {}
  ElementId n() const override { return n_; }
  std::string name() const override { return "cardinality"; }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State final : public OracleState {
   public:
    explicit State(const CardinalityOracle* o) : o_(o), in_(o->n_, 0) {}
    double Value() const override { return o_->g_(size_); }
    double Gain(ElementId a) const override {
      return in_[a] ? 0.0 : o_->g_(size_ + 1) - o_->g_(size_);
    }
    void Add(ElementId a) override {
      if (!in_[a]) {
        in_[a] = 1;
        ++size_;
      }
    }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   private:
    const CardinalityOracle* o_;
    std::vector<char> in_;
    int size_ = 0;
  };

  ElementId n_;
  std::function<double(int)> g_;
};

TEST(CheckValidityTest, AcceptsConcaveOfCardinality) {
  CardinalityOracle f(12, [](int s) { return std::sqrt(s); });
  const ValidityReport r = CheckValidity(f);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_EQ(r.triples, 1000);
}

TEST(CheckValidityTest, FlagsSupermodularFunction) {
  CardinalityOracle f(12, [](int s) { return s * s; });
  const ValidityReport r = CheckValidity(f);
  EXPECT_EQ(r.monotone_violations, 0);
  EXPECT_GT(r.submodular_violations, 0);
  EXPECT_GT(r.worst_submodular, 0.0);
  EXPECT_NE(r.first_failure.find("diminishing returns"), std::string::npos);
}

TEST(CheckValidityTest, FlagsDecreasingFunction) {
  CardinalityOracle f(12, [](int s) { return 20.0 - s; });
  const ValidityReport r = CheckValidity(f);
  EXPECT_GT(r.monotone_violations, 0);
  EXPECT_NE(r.first_failure.find("monotonicity"), std::string::npos);
}

TEST(CheckValidityTest, SeededAndDeterministic) {
  CardinalityOracle f(10, [](int s) { return s * s; });
  const ValidityReport a = CheckValidity(f, 300, RandomSeed{5});
  const ValidityReport b = CheckValidity(f, 300, RandomSeed{5});
  EXPECT_EQ(a.submodular_violations, b.submodular_violations);
  EXPECT_EQ(a.first_failure, b.first_failure);
}

TEST(CheckValidityTest, BuiltInFamiliesPass) {
  const std::vector<std::string> specs = {
      "random-bipartite:primal=40,dual=80,p=0.08",
      "random-bipartite:primal=40,dual=80,p=0.1,weighted=true",
      "random-ratings:users=30,items=25,objective=facility",
      "random-ratings:users=30,items=25,objective=movie-rec",
      "random-ratings:users=30,items=25,objective=concave",
      "random-revenue:n=25",
      "random-entropy:rows=60,cols=15",
      "random-entropy:rows=60,cols=15,label=true",
      "random-additive:n=30",
      "adversarial:c=20,k=10",
  };
  for (const auto& spec : specs) {
    const Objective obj = BuildObjective(spec, 3);
    const ValidityReport r = CheckValidity(*obj.oracle, 1000, RandomSeed{1}, 1e-9);
    EXPECT_TRUE(r.ok()) << spec << ": " << r.first_failure;
  }
}

}  // namespace
}  // namespace subcert
