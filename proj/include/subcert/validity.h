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

// Randomized monotonicity and diminishing-returns check.

#ifndef SUBCERT_VALIDITY_H_
#define SUBCERT_VALIDITY_H_

#include <string>

#include "subcert/maximizers.h"
#include "subcert/oracle.h"

namespace subcert {

struct ValidityReport {
  int triples = 0;
  int monotone_violations = 0;
  int submodular_violations = 0;
  double worst_monotone = 0.0;    // largest f(S) - f(T), S c T
  double worst_submodular = 0.0;  // largest f_T(a) - f_S(a)
  std::string first_failure;

  bool ok() const { return monotone_violations == 0 && submodular_violations == 0; }
};

// Samples (S c T, a not in T) triples and checks f(S) <= f(T) <= f(T + a)
// and f_S(a) >= f_T(a). The tolerance is relative to max(1, |f(T + a)|).
ValidityReport CheckValidity(const Oracle& f, int triples = 1000,
                             RandomSeed seed = {}, double tolerance = 1e-9);

}  // namespace subcert

#endif  // SUBCERT_VALIDITY_H_
