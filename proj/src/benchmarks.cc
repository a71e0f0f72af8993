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
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "subcert/error.h"

namespace subcert {
namespace {

constexpr double kMinTheta = 1e-12;
constexpr double kMinDenominator = 1e-12;

std::vector<double> EmptyGains(const Oracle& f) {
  auto empty = f.NewState();
  std::vector<double> gains(f.n());
  for (ElementId a = 0; a < f.n(); ++a) gains[a] = empty->Gain(a);
  return gains;
}

uint64_t SubsetsUpTo(int n, int k) {
  uint64_t total = 0;
  for (int i = 0; i <= k; ++i) {
    const uint64_t c = Binomial(n, i);
    if (c > std::numeric_limits<uint64_t>::max() - total) {
      return std::numeric_limits<uint64_t>::max();
    }
    total += c;
  }
  return total;
}

// Calls visit(state, in_set) for every S with |S| <= max_size.
void ForEachSubset(
    const Oracle& f, int max_size,
    const std::function<void(const OracleState&, const std::vector<char>&)>&
        visit) {
  const ElementId n = f.n();
  std::vector<char> in_set(n, 0);
  std::function<void(const OracleState&, int, ElementId)> recurse =
      [&](const OracleState& state, int size, ElementId start) {
        visit(state, in_set);
        if (size == max_size) return;
        for (ElementId a = start; a < n; ++a) {
          auto child = state.Clone();
          child->Add(a);
          in_set[a] = 1;
          recurse(*child, size + 1, a + 1);
          in_set[a] = 0;
        }
      };
  auto root = f.NewState();
  recurse(*root, 0, 0);
}

}  // namespace

double TopkBound(const Oracle& f, int k) {
  if (k < 0 || k > f.n()) throw InvalidArgument("TopkBound: k outside [0, n]");
  std::vector<double> gains = EmptyGains(f);
  std::partial_sort(gains.begin(), gains.begin() + k, gains.end(),
                    std::greater<>());
  double sum = f.NewState()->Value();
  for (int i = 0; i < k; ++i) sum += gains[i];
  return sum;
}

double MarginalBound(const GreedyTrace& trace, int k) {
  if (trace.length() < 1) {
    throw InvalidArgument("MarginalBound: trace needs at least one step");
  }
  if (k < 1) throw InvalidArgument("MarginalBound: k must be >= 1");
  const double r = 1.0 - 1.0 / k;
  const int len = trace.length();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j <= len; ++j) {
      const double rm = std::pow(r, j - i);
      const double den = 1.0 - rm;
      if (den < kMinDenominator) continue;
      best = std::min(best, (trace.values[j] - rm * trace.values[i]) / den);
    }
  }
  return best;
}

double CurvatureGuarantee(double c) {
  if (c < 1e-9) return 1.0;
  return -std::expm1(-c) / c;
}

CurvatureEstimate CurvatureExact(const Oracle& f, uint64_t cap) {
  const ElementId n = f.n();
  if (n >= 63 || (uint64_t{1} << n) > cap) {
    throw InfeasibleError("CurvatureExact: 2^" + std::to_string(n) +
                          " subsets exceed enumeration cap " +
                          std::to_string(cap));
  }
  const std::vector<double> single = EmptyGains(f);
  double min_ratio = 1.0;
  ForEachSubset(f, n, [&](const OracleState& state,
                          const std::vector<char>& in_set) {
    for (ElementId a = 0; a < n; ++a) {
      if (in_set[a] || single[a] <= 0.0) continue;
      min_ratio = std::min(min_ratio, state.Gain(a) / single[a]);
    }
  });
  CurvatureEstimate out;
  out.mode = CurvatureMode::kExact;
  out.c = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  out.guarantee = CurvatureGuarantee(out.c);
  return out;
}

CurvatureEstimate CurvatureHeuristic(const Oracle& f, int k) {
  const ElementId n = f.n();
  const std::vector<double> single = EmptyGains(f);
  const double full = f.Evaluate(ElementSet::Range(n));
  ElementId star = -1;
  double star_c = -std::numeric_limits<double>::infinity();
  for (ElementId a = 0; a < n; ++a) {
    if (single[a] <= 0.0) continue;
    std::vector<ElementId> rest;
    rest.reserve(n - 1);
    for (ElementId b = 0; b < n; ++b) {
      if (b != a) rest.push_back(b);
    }
    const double last = full - f.Evaluate(ElementSet::FromUnsorted(rest));
    const double c = 1.0 - last / single[a];
    if (c > star_c) {
      star_c = c;
      star = a;
    }
  }
  if (star < 0) {
    throw InvalidArgument("CurvatureHeuristic: every singleton value is 0");
  }
  // f_{S+e}(a*) = f_S(a*) + f_{S+a*}(e) - f_S(e), so the step minimizing
  // the left side only needs gains from S and from S + a*.
  auto with = f.NewState();
  auto without = f.NewState();
  with->Add(star);
  std::vector<bool> used(n, false);
  used[star] = true;
  const int steps = std::min<int>(std::max(k, 0), n - 1);
  for (int step = 0; step < steps; ++step) {
    ElementId pick = -1;
    double pick_score = std::numeric_limits<double>::infinity();
    for (ElementId e = 0; e < n; ++e) {
      if (used[e]) continue;
      const double score = with->Gain(e) - without->Gain(e);
      if (score < pick_score - kGainTieTolerance) {
        pick_score = score;
        pick = e;
      }
    }
    used[pick] = true;
    with->Add(pick);
    without->Add(pick);
  }
  CurvatureEstimate out;
  out.mode = CurvatureMode::kHeuristic;
  out.c = std::clamp(1.0 - without->Gain(star) / single[star], 0.0, 1.0);
  out.guarantee = CurvatureGuarantee(out.c);
  return out;
}

double NestedSharpnessGuarantee(const std::vector<double>& c,
                                const std::vector<double>& theta, int k) {
  if (k < 1 || static_cast<int>(c.size()) < k ||
      static_cast<int>(theta.size()) < k) {
    throw InvalidArgument("NestedSharpnessGuarantee: need k >= 1 parameters");
  }
  // d tracks (inner base) - 1.
  double d = -theta[0] / (c[0] * k);
  for (int i = 1; i < k; ++i) {
    if (d <= -1.0) return 1.0;
    d = std::expm1(theta[i] / theta[i - 1] * std::log1p(d)) -
        theta[i] / (c[i] * k);
  }
  if (d <= -1.0) return 1.0;
  return -std::expm1(std::log1p(d) / theta[k - 1]);
}

SharpnessProfile SharpnessGuarantee(const Oracle& f, int k, uint64_t cap) {
  if (k < 1 || k > f.n()) {
    throw InvalidArgument("SharpnessGuarantee: k outside [1, n]");
  }
  const uint64_t sets = SubsetsUpTo(f.n(), k);
  if (sets > cap) {
    throw InfeasibleError("SharpnessGuarantee: " + std::to_string(sets) +
                          " subsets exceed enumeration cap " +
                          std::to_string(cap));
  }
  const ExactOptimum best = BruteForceOpt(f, k, cap);
  const double f0 = f.NewState()->Value();
  const double opt = best.value - f0;
  if (!(opt > 0.0)) {
    throw InvalidArgument("SharpnessGuarantee: optimum is 0");
  }

  // Each qualifying S contributes (log(k c) + log(W2/W)) / log(OPT/W).
  struct Term {
    double log_ratio;
    double log_scale;
  };
  std::vector<Term> terms;
  const double tol = 1e-12 * std::max(1.0, opt);
  ForEachSubset(f, k, [&](const OracleState& state, const std::vector<char>&) {
    const double value = state.Value() - f0;
    const double w = opt - value;
    if (value <= tol || w <= tol) return;
    double w2 = 0.0;
    for (ElementId a : best.set) w2 = std::max(w2, state.Gain(a));
    if (w2 <= 0.0) return;
    terms.push_back({std::log(w2 / w), std::log(opt / w)});
  });

  std::map<int, double> theta_cache;
  auto theta_at = [&](int step) {
    auto it = theta_cache.find(step);
    if (it != theta_cache.end()) return it->second;
    const double log_kc = std::log(k * (1.0 + step / 100.0));
    double theta = 1.0;
    for (const Term& t : terms) {
      theta = std::min(theta, (log_kc + t.log_ratio) / t.log_scale);
    }
    theta = std::clamp(theta, kMinTheta, 1.0);
    theta_cache.emplace(step, theta);
    return theta;
  };

  SharpnessProfile out;
  out.opt = best.value;
  out.opt_set = best.set;
  std::vector<int> steps(k, 0);
  out.c.assign(k, 1.0);
  out.theta.assign(k, theta_at(0));
  out.guarantee = NestedSharpnessGuarantee(out.c, out.theta, k);
  for (int i = 0; i < k; ++i) {
    for (int step = 1; step <= 200; ++step) {
      std::vector<double> c = out.c;
      std::vector<double> theta = out.theta;
      c[i] = 1.0 + step / 100.0;
      theta[i] = theta_at(step);
      const double g = NestedSharpnessGuarantee(c, theta, k);
      if (!(g > out.guarantee)) break;
      out.c = std::move(c);
      out.theta = std::move(theta);
      out.guarantee = g;
    }
  }
  return out;
}

}  // namespace subcert
