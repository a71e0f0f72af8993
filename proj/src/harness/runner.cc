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

#include "subcert/harness/runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <thread>

#include "subcert/benchmarks.h"
#include "subcert/dual_coverage.h"
#include "subcert/dual_submodular.h"
#include "subcert/error.h"
#include "subcert/maximizers.h"

namespace subcert {
namespace {

struct Measured {
  double value = 0.0;
  double evals = 0.0;
  double wall_ms = 0.0;
  std::vector<SeedValue> per_seed;
};

struct NamedMeasure {
  std::string name;
  Measured m;
};

double Ratio(double value, double bound) {
  if (bound > 0.0) return value / bound;
  return value <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

Measured Measure(CountingOracle& counter, const std::function<double()>& fn) {
  counter.Reset();
  const auto start = std::chrono::steady_clock::now();
  Measured m;
  m.value = fn();
  const auto stop = std::chrono::steady_clock::now();
  m.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  m.evals = static_cast<double>(counter.count());
  return m;
}

Measured MeasureSeeds(CountingOracle& counter,
                      const std::vector<uint64_t>& seeds,
                      const std::function<double(uint64_t)>& fn) {
  Measured total;
  for (uint64_t seed : seeds) {
    const Measured one = Measure(counter, [&] { return fn(seed); });
    total.value += one.value;
    total.evals += one.evals;
    total.wall_ms += one.wall_ms;
    total.per_seed.push_back({seed, one.value});
  }
  const double count = static_cast<double>(seeds.size());
  total.value /= count;
  total.evals /= count;
  total.wall_ms /= count;
  return total;
}

double DualBound(const std::shared_ptr<CountingOracle>& f, int k,
                 const ExperimentConfig& config) {
  const std::vector<int> schedule =
      config.pivots ? *config.pivots : DefaultPivotSchedule();
  int longest = k;
  for (int s : schedule) longest = std::max(longest, s);
  const GreedyTrace trace = Greedy(*f, std::min<int>(longest, f->n()));
  std::vector<int> sizes = PivotSizes(trace, schedule);
  // S_k keeps the factor-2 certificate for every k.
  sizes.push_back(k);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return DualFromTrace(f, k, trace, sizes).bound;
}

double BoundValue(const std::string& name, const Objective& objective,
                  const std::shared_ptr<CountingOracle>& f, int k,
                  const ExperimentConfig& config) {
  if (name == "method1" || name == "method2") {
    if (!objective.graph) {
      throw InvalidArgument(name + " needs an unweighted coverage objective");
    }
    return name == "method1"
               ? static_cast<double>(AdditiveDualBound(*objective.graph, k) - 1)
               : static_cast<double>(PartitionDualBound(*objective.graph, k));
  }
  if (name == "method3") return Method3(*f, k).bound;
  if (name == "dual") return DualBound(f, k, config);
  if (name == "topk") return TopkBound(*f, k);
  if (name == "marginal") return MarginalBound(Greedy(*f, k), k);
  if (name == "curvature") return CurvatureHeuristic(*f, k).guarantee;
  if (name == "curvature-exact") return CurvatureExact(*f, config.cap).guarantee;
  if (name == "sharpness") return SharpnessGuarantee(*f, k, config.cap).guarantee;
  if (name == "opt") return BruteForceOpt(*f, k, config.cap).value;
  throw InvalidArgument("unknown bound '" + name + "'");
}

double AlgorithmValue(const std::string& name,
                      const std::shared_ptr<CountingOracle>& f, int k,
                      uint64_t seed, const ExperimentConfig& config) {
  if (name == "greedy") return Greedy(*f, k).values.back();
  if (name == "naive-greedy") return NaiveGreedy(*f, k).values.back();
  if (name == "local-search") return f->Evaluate(LocalSearch(*f, k));
  if (name == "sample-greedy") {
    return SampleGreedy(*f, k, config.epsilon, RandomSeed{seed}).values.back();
  }
  if (name == "random-greedy") {
    return RandomGreedy(*f, k, RandomSeed{seed}).values.back();
  }
  if (name == "opt") return BruteForceOpt(*f, k, config.cap).value;
  throw InvalidArgument("unknown algorithm '" + name + "'");
}

bool IsRandomized(const std::string& name) {
  return name == "sample-greedy" || name == "random-greedy";
}

// Averages the rows of several runs of the same cell, matching rows by
// (k, algorithm) in first-appearance order.
std::vector<ReportRow> AverageRows(
    const std::vector<std::vector<ReportRow>>& runs,
    const std::vector<uint64_t>& seeds) {
  std::vector<ReportRow> out;
  for (const auto& run : runs) {
    for (const auto& row : run) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& r) {
        return r.k == row.k && r.algorithm == row.algorithm;
      });
      if (seen) continue;
      ReportRow merged;
      merged.k = row.k;
      merged.algorithm = row.algorithm;
      std::vector<const ReportRow*> matches;
      for (size_t s = 0; s < runs.size(); ++s) {
        for (const auto& other : runs[s]) {
          if (other.k == row.k && other.algorithm == row.algorithm) {
            matches.push_back(&other);
            merged.per_seed.push_back({seeds[s], other.value});
          }
        }
      }
      const double count = static_cast<double>(matches.size());
      bool timed = true;
      double wall = 0.0;
      for (const ReportRow* m : matches) {
        merged.value += m->value / count;
        merged.evals += m->evals / count;
        if (m->wall_ms) {
          wall += *m->wall_ms / count;
        } else {
          timed = false;
        }
      }
      if (timed) merged.wall_ms = wall;
      auto average = [&](auto member) {
        std::vector<NamedValue> result;
        for (const auto& nv : row.*member) {
          double sum = 0.0;
          int present = 0;
          for (const ReportRow* m : matches) {
            for (const auto& x : m->*member) {
              if (x.name == nv.name) {
                sum += x.value;
                ++present;
              }
            }
          }
          result.push_back({nv.name, sum / present});
        }
        return result;
      };
      merged.bounds = average(&ReportRow::bounds);
      merged.ratio = average(&ReportRow::ratio);
      out.push_back(std::move(merged));
    }
  }
  return out;
}

void ParallelFor(size_t count, int threads,
                 const std::function<void(size_t)>& body) {
  const size_t workers = std::min<size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<ReportRow> RunCell(const Objective& objective, int k,
                               const ExperimentConfig& config,
                               std::vector<CellError>* errors) {
  const ElementId n = objective.oracle->n();
  if (k > n) {
    errors->push_back({k, "k", "k=" + std::to_string(k) + " exceeds n=" +
                                   std::to_string(n)});
    return {};
  }
  auto counting = std::make_shared<CountingOracle>(objective.oracle);
  auto guarded = [&](const std::string& cell, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      errors->push_back({k, cell, e.what()});
    }
  };

  std::vector<NamedMeasure> algorithms;
  for (const std::string& name : config.algorithms) {
    guarded(name, [&] {
      Measured m;
      if (IsRandomized(name)) {
        m = MeasureSeeds(*counting, config.seeds, [&](uint64_t seed) {
          return AlgorithmValue(name, counting, k, seed, config);
        });
      } else {
        m = Measure(*counting, [&] {
          return AlgorithmValue(name, counting, k, 0, config);
        });
      }
      algorithms.push_back({name, std::move(m)});
    });
  }

  std::vector<NamedMeasure> bounds;
  for (const std::string& name : config.bounds) {
    guarded(kBoundRowPrefix + name, [&] {
      bounds.push_back({name, Measure(*counting, [&] {
                          return BoundValue(name, objective, counting, k,
                                            config);
                        })});
    });
  }

  auto wall = [&](const Measured& m) -> std::optional<double> {
    if (!config.timing) return std::nullopt;
    return m.wall_ms;
  };
  std::vector<ReportRow> rows;
  for (const auto& [name, m] : algorithms) {
    ReportRow row;
    row.k = k;
    row.algorithm = name;
    row.value = m.value;
    row.evals = m.evals;
    row.wall_ms = wall(m);
    row.per_seed = m.per_seed;
    for (const auto& [bname, bm] : bounds) {
      if (IsGuarantee(bname)) {
        if (name == "greedy") row.ratio.push_back({bname, bm.value});
        continue;
      }
      row.bounds.push_back({bname, bm.value});
      row.ratio.push_back({bname, Ratio(m.value, bm.value)});
    }
    rows.push_back(std::move(row));
  }
  for (const auto& [bname, bm] : bounds) {
    ReportRow row;
    row.k = k;
    row.algorithm = kBoundRowPrefix + bname;
    row.value = bm.value;
    row.evals = bm.evals;
    row.wall_ms = wall(bm);
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundReport Run(const ExperimentConfig& config, uint64_t default_seed) {
  config.Validate();
  BoundReport report;
  report.config_hash = config.Hash();

  // Objectives are built up front; a failure becomes an instance error.
  std::vector<std::optional<Objective>> objectives;
  std::vector<std::string> build_errors;
  for (const std::string& spec : config.objectives) {
    try {
      Objective obj = BuildObjective(spec, default_seed);
      for (const auto& w : obj.warnings) {
        report.warnings.push_back(obj.name + ": " + w);
      }
      objectives.emplace_back(std::move(obj));
      build_errors.emplace_back();
    } catch (const std::exception& e) {
      objectives.emplace_back();
      build_errors.emplace_back(e.what());
    }
  }

  struct Task {
    size_t objective;
    size_t k_index;
    size_t seed_index;  // protocol only
    std::vector<ReportRow> rows;
    std::vector<CellError> errors;
  };
  std::vector<Task> tasks;
  const size_t seed_count =
      config.protocol ? config.protocol->instance_seeds.size() : 1;
  for (size_t o = 0; o < objectives.size(); ++o) {
    if (!objectives[o]) continue;
    for (size_t ki = 0; ki < config.k.size(); ++ki) {
      for (size_t s = 0; s < seed_count; ++s) tasks.push_back({o, ki, s, {}, {}});
    }
  }
  ParallelFor(tasks.size(), config.threads, [&](size_t i) {
    Task& t = tasks[i];
    const int k = config.k[t.k_index];
    const Objective& obj = *objectives[t.objective];
    if (!config.protocol) {
      t.rows = RunCell(obj, k, config, &t.errors);
      return;
    }
    const uint64_t seed = config.protocol->instance_seeds[t.seed_index];
    try {
      const Objective sub =
          Subsample(obj, config.protocol->n_per_k * k, seed);
      t.rows = RunCell(sub, k, config, &t.errors);
      for (auto& e : t.errors) {
        e.message = "instance seed " + std::to_string(seed) + ": " + e.message;
      }
    } catch (const std::exception& e) {
      t.errors.push_back({k, "subsample", "instance seed " +
                                              std::to_string(seed) + ": " +
                                              e.what()});
    }
  });

  size_t next_task = 0;
  for (size_t o = 0; o < objectives.size(); ++o) {
    if (!objectives[o]) {
      InstanceReport inst;
      inst.name = config.objectives[o];
      inst.errors.push_back({0, "objective", build_errors[o]});
      report.instances.push_back(std::move(inst));
      continue;
    }
    const Objective& obj = *objectives[o];
    if (!config.protocol) {
      InstanceReport inst;
      inst.name = obj.name;
      inst.n = obj.oracle->n();
      for (size_t ki = 0; ki < config.k.size(); ++ki) {
        Task& t = tasks[next_task++];
        for (auto& r : t.rows) inst.rows.push_back(std::move(r));
        for (auto& e : t.errors) inst.errors.push_back(std::move(e));
      }
      report.instances.push_back(std::move(inst));
      continue;
    }
    for (size_t ki = 0; ki < config.k.size(); ++ki) {
      const int k = config.k[ki];
      InstanceReport inst;
      inst.n = static_cast<int64_t>(config.protocol->n_per_k) * k;
      inst.name = obj.name + "@n=" + std::to_string(inst.n);
      std::vector<std::vector<ReportRow>> runs;
      std::vector<uint64_t> run_seeds;
      for (size_t s = 0; s < seed_count; ++s) {
        Task& t = tasks[next_task++];
        if (!t.rows.empty()) {
          runs.push_back(std::move(t.rows));
          run_seeds.push_back(config.protocol->instance_seeds[s]);
        }
        for (auto& e : t.errors) inst.errors.push_back(std::move(e));
      }
      inst.rows = AverageRows(runs, run_seeds);
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

}  // namespace subcert
