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

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "subcert/error.h"

namespace subcert {
namespace {

void CheckK(const Oracle& f, int k, const char* who) {
  if (k < 0 || k > f.n()) {
    throw InvalidArgument(std::string(who) + ": k=" + std::to_string(k) +
                          " outside [0, n=" + std::to_string(f.n()) + "]");
  }
}

// Runs the scan on g(T) = f(S u T) - f(S), where `base` holds S.
ValuePartition Scan(const OracleState& base, ElementId n, int k) {
  ValuePartition p;
  p.singleton.resize(n);
  std::vector<double> gain(n);
  for (ElementId a = 0; a < n; ++a) gain[a] = base.Gain(a);
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](ElementId x, ElementId y) { return gain[x] > gain[y]; });
  for (ElementId i = 0; i < n; ++i) p.singleton[i] = gain[p.order[i]];

  // Prefix values are extended on demand, so only A_1..A_{i_k} are built.
  const double offset = base.Value();
  auto state = base.Clone();
  p.prefix_value.push_back(0.0);
  auto prefix = [&](int64_t i) {
    while (static_cast<int64_t>(p.prefix_value.size()) <= i) {
      state->Add(p.order[p.prefix_value.size() - 1]);
      p.prefix_value.push_back(state->Value() - offset);
    }
    return p.prefix_value[i];
  };
  // 1-based singleton value f(a_i).
  auto single = [&](int64_t i) { return p.singleton[i - 1]; };

  double sum = 0.0;
  int64_t pos = 1;  // next candidate index
  int64_t last_witness = 0;
  bool exhausted = false;
  for (int j = 0; j < k; ++j) {
    double v = 0.0;
    int64_t witness = last_witness;
    if (!exhausted) {
      while (pos <= n && prefix(pos) - sum < single(pos) - kScanTolerance) {
        ++pos;
      }
      if (pos > n) {
        // No crossing left: the best witness is N itself.
        exhausted = true;
        const double top = prefix(n);
        v = std::max(0.0, top - sum);
        witness = std::max<int64_t>(last_witness, 0);
        while (witness < n && prefix(witness) < top - kScanTolerance) {
          ++witness;
        }
      } else if (prefix(pos - 1) - sum >= single(pos) - kScanTolerance) {
        v = std::max(0.0, prefix(pos - 1) - sum);
        witness = pos - 1;
      } else {
        v = single(pos);
        witness = pos;
        ++pos;
      }
    }
    p.values.push_back(v);
    p.witness.push_back(witness);
    sum += v;
    last_witness = witness;
  }
  p.total = sum;
  return p;
}

std::vector<PivotBound> RunPivots(
    size_t count, int num_threads,
    const std::function<PivotBound(size_t)>& one) {
  std::vector<PivotBound> out(count);
  const size_t workers =
      std::min<size_t>(std::max(num_threads, 1), std::max<size_t>(count, 1));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = one(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t i = w; i < count; i += workers) out[i] = one(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

UpperBoundCert Reduce(double full_value, std::vector<PivotBound> pivots) {
  UpperBoundCert cert;
  cert.method = "dual";
  cert.bound = full_value;
  for (size_t i = 0; i < pivots.size(); ++i) {
    const double candidate = pivots[i].pivot_value + pivots[i].shifted_bound;
    if (candidate < cert.bound) {
      cert.bound = candidate;
      cert.best_pivot = static_cast<int>(i);
    }
  }
  cert.pivots = std::move(pivots);
  return cert;
}

}  // namespace

ValuePartitionBound Method3(const Oracle& f, int k) {
  CheckK(f, k, "Method3");
  auto empty = f.NewState();
  ValuePartitionBound out;
  out.partition = Scan(*empty, f.n(), k);
  out.bound = empty->Value() + out.partition.total;
  return out;
}

std::string CheckValuePartition(const Oracle& f, const ValuePartition& p,
                                double tolerance) {
  std::ostringstream err;
  const int64_t n = f.n();
  if (p.values.size() != p.witness.size()) return "size mismatch";
  if (static_cast<int64_t>(p.order.size()) != n) return "order size mismatch";
  const double f0 = f.Evaluate(ElementSet{});
  std::vector<double> single(n);
  for (int64_t i = 0; i < n; ++i) {
    single[i] = f.Singleton(p.order[i]) - f0;
    if (i > 0 && single[i] > single[i - 1] + tolerance) {
      err << "singleton order not nonincreasing at " << i;
      return err.str();
    }
  }
  double sum = 0.0;
  int64_t prev = 0;
  for (size_t j = 0; j < p.values.size(); ++j) {
    const double v = p.values[j];
    const int64_t w = p.witness[j];
    const double scale = std::max(1.0, std::abs(v));
    if (v < 0.0) err << "v_" << j + 1 << " negative";
    if (w < prev || w > n) err << "witness " << w << " out of order";
    if (!err.str().empty()) return err.str();
    std::vector<ElementId> prefix(p.order.begin(), p.order.begin() + w);
    const double fw = f.Evaluate(ElementSet::FromUnsorted(prefix)) - f0;
    const double fa = w == 0 ? 0.0 : single[w - 1];
    if (fa < v - tolerance * scale) {
      err << "part " << j + 1 << ": f(a_i)=" << fa << " < v=" << v;
      return err.str();
    }
    if (fw - sum < v - tolerance * std::max(scale, std::abs(fw))) {
      err << "part " << j + 1 << ": f(A_i)-sum=" << fw - sum << " < v=" << v;
      return err.str();
    }
    sum += v;
    prev = w;
  }
  if (std::abs(sum - p.total) > tolerance * std::max(1.0, std::abs(sum))) {
    return "total does not match the parts";
  }
  return "";
}

UpperBoundCert Dual(const OraclePtr& f, int k,
                    const std::vector<ElementSet>& pivots, int num_threads) {
  CheckK(*f, k, "Dual");
  for (const ElementSet& s : pivots) s.CheckRange(f->n());
  const double full = f->Evaluate(ElementSet::Range(f->n()));
  auto one = [&](size_t i) {
    auto state = f->NewState();
    for (ElementId a : pivots[i]) state->Add(a);
    PivotBound pb;
    pb.pivot = pivots[i];
    pb.pivot_value = f->Evaluate(pivots[i]);
    pb.shifted_bound = Scan(*state, f->n(), k).total;
    return pb;
  };
  return Reduce(full, RunPivots(pivots.size(), num_threads, one));
}

UpperBoundCert DualFromTrace(const OraclePtr& f, int k,
                             const GreedyTrace& trace,
                             const std::vector<int>& prefix_sizes,
                             int num_threads) {
  CheckK(*f, k, "Dual");
  for (int size : prefix_sizes) {
    if (size < 0 || size > trace.length()) {
      throw InvalidArgument("Dual: prefix size " + std::to_string(size) +
                            " outside the trace");
    }
  }
  const double full = f->Evaluate(ElementSet::Range(f->n()));
  auto one = [&](size_t i) {
    const int size = prefix_sizes[i];
    auto state = f->NewState();
    for (int step = 0; step < size; ++step) state->Add(trace.chosen[step]);
    PivotBound pb;
    pb.pivot = trace.Prefix(size);
    pb.pivot_value = trace.values[size];
    pb.shifted_bound = Scan(*state, f->n(), k).total;
    return pb;
  };
  return Reduce(full, RunPivots(prefix_sizes.size(), num_threads, one));
}

std::vector<int> DefaultPivotSchedule() {
  std::vector<int> schedule;
  for (int i = 0; i <= 20; ++i) schedule.push_back(i);
  for (int i = 25; i <= 50; i += 5) schedule.push_back(i);
  return schedule;
}

std::vector<int> PivotSizes(const GreedyTrace& trace,
                            const std::vector<int>& schedule) {
  std::vector<int> sizes = {0};
  for (int s : schedule) {
    if (s > 0 && s <= trace.length()) sizes.push_back(s);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

std::vector<ElementSet> DefaultPivots(const GreedyTrace& trace) {
  return DefaultPivots(trace, DefaultPivotSchedule());
}

std::vector<ElementSet> DefaultPivots(const GreedyTrace& trace,
                                      const std::vector<int>& schedule) {
  std::vector<ElementSet> out;
  for (int size : PivotSizes(trace, schedule)) out.push_back(trace.Prefix(size));
  return out;
}

}  // namespace subcert
