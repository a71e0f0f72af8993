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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "subcert/error.h"

namespace subcert {

ValidityReport CheckValidity(const Oracle& f, int triples, RandomSeed seed,
                             double tolerance) {
  const ElementId n = f.n();
  if (n < 1) throw InvalidArgument("CheckValidity: empty ground set");
  std::mt19937_64 rng(seed.value);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ValidityReport report;
  for (int t = 0; t < triples; ++t) {
    // Density varies per triple so both sparse and dense sets show up.
    const double p = unit(rng);
    const double q = unit(rng);
    std::vector<ElementId> s_ids, t_ids, outside;
    for (ElementId a = 0; a < n; ++a) {
      if (unit(rng) < p) {
        t_ids.push_back(a);
        if (unit(rng) < q) s_ids.push_back(a);
      } else {
        outside.push_back(a);
      }
    }
    if (outside.empty()) {
      std::uniform_int_distribution<size_t> drop(0, t_ids.size() - 1);
      const ElementId removed = t_ids[drop(rng)];
      t_ids.erase(std::find(t_ids.begin(), t_ids.end(), removed));
      s_ids.erase(std::remove(s_ids.begin(), s_ids.end(), removed),
                  s_ids.end());
      outside.push_back(removed);
    }
    std::uniform_int_distribution<size_t> pick(0, outside.size() - 1);
    const ElementId a = outside[pick(rng)];

    const ElementSet s = ElementSet::FromUnsorted(s_ids);
    const ElementSet big = ElementSet::FromUnsorted(t_ids);
    const double fs = f.Evaluate(s);
    const double ft = f.Evaluate(big);
    const double fsa = f.Evaluate(s.Union(ElementSet{a}));
    const double fta = f.Evaluate(big.Union(ElementSet{a}));
    const double slack = tolerance * std::max(1.0, std::abs(fta));
    ++report.triples;

    const double mono = std::max(fs - ft, ft - fta);
    report.worst_monotone = std::max(report.worst_monotone, mono);
    if (mono > slack) {
      ++report.monotone_violations;
      if (report.first_failure.empty()) {
        std::ostringstream msg;
        msg << "monotonicity: S=" << s.ToString() << " T=" << big.ToString()
            << " a=" << a << " f(S)=" << fs << " f(T)=" << ft
            << " f(T+a)=" << fta;
        report.first_failure = msg.str();
      }
    }
    const double dr = (fta - ft) - (fsa - fs);
    report.worst_submodular = std::max(report.worst_submodular, dr);
    if (dr > slack) {
      ++report.submodular_violations;
      if (report.first_failure.empty()) {
        std::ostringstream msg;
        msg << "diminishing returns: S=" << s.ToString()
            << " T=" << big.ToString() << " a=" << a
            << " f_S(a)=" << fsa - fs << " f_T(a)=" << fta - ft;
        report.first_failure = msg.str();
      }
    }
  }
  return report;
}

}  // namespace subcert
