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

#include "subcert/oracle.h"

#include "subcert/error.h"

namespace subcert {

double Oracle::Evaluate(const ElementSet& s) const {
  s.CheckRange(n());
  auto state = NewState();
  for (ElementId a : s) state->Add(a);
  return state->Value();
}

namespace {

class ShiftedState final : public OracleState {
 public:
  ShiftedState(std::unique_ptr<OracleState> base, double offset)
      : base_(std::move(base)), offset_(offset) {}

  double Value() const override { return base_->Value() - offset_; }
  double Gain(ElementId a) const override { return base_->Gain(a); }
  void Add(ElementId a) override { base_->Add(a); }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<ShiftedState>(base_->Clone(), offset_);
  }

 private:
  std::unique_ptr<OracleState> base_;
  double offset_;
};

class CountingState final : public OracleState {
 public:
  CountingState(std::unique_ptr<OracleState> base,
                std::shared_ptr<std::atomic<int64_t>> count)
      : base_(std::move(base)), count_(std::move(count)) {}

  double Value() const override { return base_->Value(); }
  double Gain(ElementId a) const override {
    count_->fetch_add(1, std::memory_order_relaxed);
    return base_->Gain(a);
  }
  void Add(ElementId a) override { base_->Add(a); }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<CountingState>(base_->Clone(), count_);
  }

 private:
  std::unique_ptr<OracleState> base_;
  std::shared_ptr<std::atomic<int64_t>> count_;
};

}  // namespace

ShiftedOracle::ShiftedOracle(OraclePtr base, ElementSet pivot)
    : base_(std::move(base)), pivot_(std::move(pivot)) {
  pivot_.CheckRange(base_->n());
  offset_ = base_->Evaluate(pivot_);
}

std::string ShiftedOracle::name() const {
  return base_->name() + "|" + pivot_.ToString();
}

std::unique_ptr<OracleState> ShiftedOracle::NewState() const {
  auto state = base_->NewState();
  for (ElementId a : pivot_) state->Add(a);
  return std::make_unique<ShiftedState>(std::move(state), offset_);
}

double ShiftedOracle::Evaluate(const ElementSet& t) const {
  return base_->Evaluate(pivot_.Union(t)) - offset_;
}

std::shared_ptr<const ShiftedOracle> Shift(OraclePtr base, ElementSet pivot) {
  return std::make_shared<const ShiftedOracle>(std::move(base),
                                               std::move(pivot));
}

std::unique_ptr<OracleState> CountingOracle::NewState() const {
  return std::make_unique<CountingState>(base_->NewState(), count_);
}

double CountingOracle::Evaluate(const ElementSet& s) const {
  count_->fetch_add(1, std::memory_order_relaxed);
  return base_->Evaluate(s);
}

}  // namespace subcert
