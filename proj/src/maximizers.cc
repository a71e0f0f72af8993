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

#include "subcert/maximizers.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "subcert/error.h"

namespace subcert {
namespace {

void CheckK(const Oracle& f, int k, const char* who) {
  if (k < 0 || k > f.n()) {
    throw InvalidArgument(std::string(who) + ": k=" + std::to_string(k) +
                          " outside [0, n=" + std::to_string(f.n()) + "]");
  }
}

// Index into `candidates` of the element to pick: among gains within
// kGainTieTolerance of the maximum, the lowest id.
size_t PickBest(const std::vector<ElementId>& candidates,
                const std::vector<double>& gains) {
  double best = -std::numeric_limits<double>::infinity();
  for (double g : gains) best = std::max(best, g);
  size_t pick = candidates.size();
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (gains[i] >= best - kGainTieTolerance &&
        (pick == candidates.size() || candidates[i] < candidates[pick])) {
      pick = i;
    }
  }
  return pick;
}

void Append(GreedyTrace* trace, OracleState* state, ElementId a,
            double gain) {
  state->Add(a);
  trace->chosen.push_back(a);
  trace->gains.push_back(gain);
  trace->values.push_back(state->Value());
}

}  // namespace

ElementSet GreedyTrace::Prefix(int i) const {
  if (i < 0 || i > length()) {
    throw InvalidArgument("GreedyTrace::Prefix: index out of range");
  }
  return ElementSet::FromUnsorted(
      std::vector<ElementId>(chosen.begin(), chosen.begin() + i));
}

GreedyTrace NaiveGreedy(const Oracle& f, int kmax) {
  CheckK(f, kmax, "NaiveGreedy");
  auto state = f.NewState();
  GreedyTrace trace;
  trace.values.push_back(state->Value());
  std::vector<ElementId> remaining(f.n());
  for (ElementId a = 0; a < f.n(); ++a) remaining[a] = a;
  std::vector<double> gains;
  for (int step = 0; step < kmax; ++step) {
    gains.resize(remaining.size());
    for (size_t i = 0; i < remaining.size(); ++i) {
      gains[i] = state->Gain(remaining[i]);
    }
    const size_t pick = PickBest(remaining, gains);
    Append(&trace, state.get(), remaining[pick], gains[pick]);
    remaining.erase(remaining.begin() + pick);
  }
  return trace;
}

GreedyTrace Greedy(const Oracle& f, int kmax) {
  CheckK(f, kmax, "Greedy");
  auto state = f.NewState();
  GreedyTrace trace;
  trace.values.push_back(state->Value());
  if (kmax == 0) return trace;

  struct Entry {
    double bound;
    ElementId id;
  };
  // Largest bound first, then lowest id.
  auto worse = [](const Entry& x, const Entry& y) {
    return x.bound < y.bound || (x.bound == y.bound && x.id > y.id);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
  std::vector<int> fresh_at(f.n(), 0);
  for (ElementId a = 0; a < f.n(); ++a) queue.push({state->Gain(a), a});

  std::vector<ElementId> refreshed;
  std::vector<double> gains;
  for (int step = 0; step < kmax; ++step) {
    refreshed.clear();
    gains.clear();
    double best = -std::numeric_limits<double>::infinity();
    while (!queue.empty()) {
      const Entry top = queue.top();
      // Stale bounds only shrink, so nothing below this can tie the best.
      if (!refreshed.empty() && top.bound < best - kGainTieTolerance) break;
      queue.pop();
      const double gain =
          fresh_at[top.id] == step ? top.bound : state->Gain(top.id);
      fresh_at[top.id] = step;
      refreshed.push_back(top.id);
      gains.push_back(gain);
      best = std::max(best, gain);
    }
    const size_t pick = PickBest(refreshed, gains);
    for (size_t i = 0; i < refreshed.size(); ++i) {
      if (i != pick) queue.push({gains[i], refreshed[i]});
    }
    Append(&trace, state.get(), refreshed[pick], gains[pick]);
  }
  return trace;
}

ElementSet LocalSearch(const Oracle& f, int k) {
  CheckK(f, k, "LocalSearch");
  const ElementId n = f.n();
  std::vector<ElementId> order(n);
  std::vector<double> singleton(n);
  {
    auto empty = f.NewState();
    for (ElementId a = 0; a < n; ++a) {
      order[a] = a;
      singleton[a] = empty->Gain(a);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId x, ElementId y) {
    return singleton[x] > singleton[y];
  });
  ElementSet current = ElementSet::FromUnsorted(
      std::vector<ElementId>(order.begin(), order.begin() + k));
  double value = f.Evaluate(current);

  bool improved = true;
  while (improved) {
    improved = false;
    for (ElementId out : current) {
      auto state = f.NewState();
      for (ElementId a : current) {
        if (a != out) state->Add(a);
      }
      const double base = state->Value();
      for (ElementId in = 0; in < n && !improved; ++in) {
        if (current.Contains(in)) continue;
        if (base + state->Gain(in) > value + kSwapTolerance) {
          std::vector<ElementId> next;
          for (ElementId a : current) {
            if (a != out) next.push_back(a);
          }
          next.push_back(in);
          current = ElementSet::FromUnsorted(std::move(next));
          value = f.Evaluate(current);
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return current;
}

int SampleGreedySampleSize(int n, int k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("SampleGreedy: epsilon must be in (0, 1)");
  }
  if (k < 1) throw InvalidArgument("SampleGreedy: k must be >= 1");
  const double raw = static_cast<double>(n) * std::log(1.0 / epsilon) / k;
  // Absorb rounding in log so that e.g. epsilon = 1/e, k = n gives 1.
  const double size = std::ceil(raw - 1e-9);
  return static_cast<int>(std::clamp(size, 1.0, static_cast<double>(n)));
}

GreedyTrace SampleGreedy(const Oracle& f, int k, double epsilon,
                         RandomSeed seed) {
  CheckK(f, k, "SampleGreedy");
  GreedyTrace trace;
  auto state = f.NewState();
  trace.values.push_back(state->Value());
  if (k == 0) return trace;
  const int sample_size = SampleGreedySampleSize(f.n(), k, epsilon);
  std::mt19937_64 rng(seed.value);
  std::vector<ElementId> remaining(f.n());
  for (ElementId a = 0; a < f.n(); ++a) remaining[a] = a;
  std::vector<ElementId> sample;
  std::vector<double> gains;
  for (int step = 0; step < k; ++step) {
    sample.clear();
    std::sample(remaining.begin(), remaining.end(), std::back_inserter(sample),
                std::min<size_t>(sample_size, remaining.size()), rng);
    gains.resize(sample.size());
    for (size_t i = 0; i < sample.size(); ++i) gains[i] = state->Gain(sample[i]);
    const size_t pick = PickBest(sample, gains);
    const ElementId chosen = sample[pick];
    Append(&trace, state.get(), chosen, gains[pick]);
    remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), chosen));
  }
  return trace;
}

GreedyTrace RandomGreedy(const Oracle& f, int k, RandomSeed seed) {
  CheckK(f, k, "RandomGreedy");
  GreedyTrace trace;
  auto state = f.NewState();
  trace.values.push_back(state->Value());
  std::mt19937_64 rng(seed.value);
  std::vector<ElementId> remaining(f.n());
  for (ElementId a = 0; a < f.n(); ++a) remaining[a] = a;
  std::vector<std::pair<double, ElementId>> ranked;
  for (int step = 0; step < k; ++step) {
    ranked.clear();
    for (ElementId a : remaining) ranked.emplace_back(state->Gain(a), a);
    const size_t top = std::min<size_t>(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + top, ranked.end(),
                      [](const auto& x, const auto& y) {
                        return x.first > y.first ||
                               (x.first == y.first && x.second < y.second);
                      });
    std::uniform_int_distribution<size_t> pick(0, top - 1);
    const auto [gain, chosen] = ranked[pick(rng)];
    Append(&trace, state.get(), chosen, gain);
    remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), chosen));
  }
  return trace;
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(result);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Oracle& f, int k) : f_(f), k_(k), states_(k + 1) {}

  ExactOptimum Run() {
    states_[0] = f_.NewState();
    best_value_ = states_[0]->Value();
    if (k_ > 0) Recurse(0, 0);
    ExactOptimum out;
    out.set = ElementSet::FromUnsorted(best_);
    out.value = f_.Evaluate(out.set);
    return out;
  }

 private:
  void Record(double value, ElementId last) {
    if (value > best_value_) {
      best_value_ = value;
      best_ = current_;
      best_.push_back(last);
    }
  }

  // states_[depth] holds the current set of size `depth`.
  void Recurse(int depth, ElementId start) {
    const ElementId n = f_.n();
    const ElementId stop = n - (k_ - depth - 1);  // keep room to reach k
    OracleState& here = *states_[depth];
    if (depth == k_ - 1) {
      const double base = here.Value();
      for (ElementId a = start; a < stop; ++a) Record(base + here.Gain(a), a);
      return;
    }
    for (ElementId a = start; a < stop; ++a) {
      states_[depth + 1] = here.Clone();
      states_[depth + 1]->Add(a);
      Record(states_[depth + 1]->Value(), a);
      current_.push_back(a);
      Recurse(depth + 1, a + 1);
      current_.pop_back();
    }
  }

  const Oracle& f_;
  int k_;
  std::vector<std::unique_ptr<OracleState>> states_;
  std::vector<ElementId> current_;
  std::vector<ElementId> best_;
  double best_value_ = 0.0;
};

}  // namespace

ExactOptimum BruteForceOpt(const Oracle& f, int k, uint64_t cap) {
  if (k < 0) throw InvalidArgument("BruteForceOpt: negative k");
  k = std::min<int>(k, f.n());
  const uint64_t combos = Binomial(f.n(), k);
  if (combos > cap) {
    throw InfeasibleError("BruteForceOpt: C(" + std::to_string(f.n()) + ", " +
                          std::to_string(k) + ") = " + std::to_string(combos) +
                          " exceeds enumeration cap " + std::to_string(cap));
  }
  return Enumerator(f, k).Run();
}

}  // namespace subcert
