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

// Set-function oracle abstraction.
//
// An Oracle is an immutable monotone set function f over the ground set
// {0, ..., n-1}. Evaluation is pure, so one oracle may be shared across
// threads. Incremental work (greedy steps, prefix scans) goes through an
// OracleState, a mutable "current set S" owned by a single caller:
//
//   auto state = oracle.NewState();       // S = {}
//   double gain = state->Gain(a);         // f_S(a) = f(S + a) - f(S)
//   state->Add(a);                        // S <- S + a
//   double value = state->Value();        // f(S)

#ifndef SUBCERT_ORACLE_H_
#define SUBCERT_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "subcert/element_set.h"

namespace subcert {

class OracleState {
 public:
  virtual ~OracleState() = default;

  virtual double Value() const = 0;
  // Marginal gain f_S(a). Zero for a already in S.
  virtual double Gain(ElementId a) const = 0;
  // Adding an element that is already present is a no-op.
  virtual void Add(ElementId a) = 0;
  virtual std::unique_ptr<OracleState> Clone() const = 0;
};

class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual ElementId n() const = 0;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<OracleState> NewState() const = 0;

  // f(S). The default builds a fresh state and adds S in increasing id
  // order, so the result depends only on the set.
  virtual double Evaluate(const ElementSet& s) const;

  double Singleton(ElementId a) const { return Evaluate(ElementSet{a}); }
};

using OraclePtr = std::shared_ptr<const Oracle>;

// f_S(T) = f(S u T) - f(S). Elements of the pivot stay in the ground set
// and have zero marginal value.
class ShiftedOracle final : public Oracle {
 public:
  ShiftedOracle(OraclePtr base, ElementSet pivot);

  ElementId n() const override { return base_->n(); }
  std::string name() const override;
  std::unique_ptr<OracleState> NewState() const override;
  double Evaluate(const ElementSet& t) const override;

  const Oracle& base() const { return *base_; }
  const ElementSet& pivot() const { return pivot_; }
  double offset() const { return offset_; }

 private:
  OraclePtr base_;
  ElementSet pivot_;
  double offset_;
};

// Throws InvalidArgument if the pivot has ids outside the ground set.
std::shared_ptr<const ShiftedOracle> Shift(OraclePtr base, ElementSet pivot);

// Counts oracle queries: every Evaluate call and every Gain call on a
// state derived from this oracle. Add is bookkeeping and is not counted.
class CountingOracle final : public Oracle {
 public:
  explicit CountingOracle(OraclePtr base) : base_(std::move(base)) {}

  ElementId n() const override { return base_->n(); }
  std::string name() const override { return base_->name(); }
  std::unique_ptr<OracleState> NewState() const override;
  double Evaluate(const ElementSet& s) const override;

  int64_t count() const { return count_->load(std::memory_order_relaxed); }
  void Reset() { count_->store(0, std::memory_order_relaxed); }

 private:
  OraclePtr base_;
  std::shared_ptr<std::atomic<int64_t>> count_ =
      std::make_shared<std::atomic<int64_t>>(0);
};

}  // namespace subcert

#endif  // SUBCERT_ORACLE_H_
