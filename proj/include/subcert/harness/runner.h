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

#ifndef SUBCERT_HARNESS_RUNNER_H_
#define SUBCERT_HARNESS_RUNNER_H_

#include <cstdint>
#include <vector>

#include "subcert/harness/config.h"
#include "subcert/harness/objective_spec.h"
#include "subcert/harness/report.h"

namespace subcert {

// Runs every requested algorithm and bound on one (objective, k) cell.
// Failures are appended to `errors` and leave the affected entries out.
std::vector<ReportRow> RunCell(const Objective& objective, int k,
                               const ExperimentConfig& config,
                               std::vector<CellError>* errors);

// Runs the whole sweep. Objectives that fail to build become an instance
// with an error and no rows. Deterministic given the config and seed,
// apart from wall times.
BoundReport Run(const ExperimentConfig& config, uint64_t default_seed = 0);

}  // namespace subcert

#endif  // SUBCERT_HARNESS_RUNNER_H_
