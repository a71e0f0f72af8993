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

// Experiment configuration, read from JSON or TOML with the same keys:
//
//   objectives = ["random-ratings:users=100,items=40,seed=3"]
//   k = [1, 2, 5, 10]
//   algorithms = ["greedy", "local-search"]
//   bounds = ["dual", "marginal", "topk"]
//   pivots = [0, 1, 2, 5]          # greedy prefix sizes; default schedule
//   seeds = [1, 2, 3, 4, 5]        # randomized algorithms
//   cap = 5000000
//   epsilon = 0.1                  # sample-greedy
//   threads = 1
//   timing = true
//   output = "report.json"
//   format = "json"
//   [protocol]                     # optional subsampling sweep
//   n_per_k = 2
//   instance_seeds = [1, 2, 3, 4, 5]

#ifndef SUBCERT_HARNESS_CONFIG_H_
#define SUBCERT_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcert/maximizers.h"

namespace subcert {

enum class ReportFormat { kJson, kCsv };

ReportFormat ParseReportFormat(const std::string& text);

struct SubsampleProtocol {
  int n_per_k = 2;
  std::vector<uint64_t> instance_seeds = {1, 2, 3, 4, 5};
};

struct ExperimentConfig {
  std::vector<std::string> objectives;
  std::vector<int> k;
  std::vector<std::string> algorithms = {"greedy"};
  std::vector<std::string> bounds = {"dual"};
  std::optional<std::vector<int>> pivots;
  std::vector<uint64_t> seeds = {1};
  uint64_t cap = kDefaultEnumerationCap;
  double epsilon = 0.1;
  int threads = 1;
  bool timing = true;
  std::string output;
  ReportFormat format = ReportFormat::kJson;
  std::optional<SubsampleProtocol> protocol;

  // Throws InvalidArgument when the config is inconsistent: empty or
  // non-increasing k schedule, unknown algorithm or bound names, etc.
  void Validate() const;
  // Canonical form; the report hash is computed over it.
  nlohmann::json ToJson() const;
  std::string Hash() const;
};

inline const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kNames = {
      "greedy", "naive-greedy", "local-search", "sample-greedy",
      "random-greedy", "opt"};
  return kNames;
}

inline const std::vector<std::string>& KnownBounds() {
  static const std::vector<std::string> kNames = {
      "method1",  "method2",   "method3",         "dual",
      "topk",     "marginal",  "curvature",       "curvature-exact",
      "sharpness", "opt"};
  return kNames;
}

// Bounds that are greedy guarantees rather than upper bounds on OPT.
bool IsGuarantee(const std::string& bound);

ExperimentConfig ConfigFromJson(const nlohmann::json& j);
// Dispatches on the extension: .toml or .json.
ExperimentConfig LoadConfig(const std::string& path);
ExperimentConfig ParseConfig(const std::string& text, bool toml);

}  // namespace subcert

#endif  // SUBCERT_HARNESS_CONFIG_H_
