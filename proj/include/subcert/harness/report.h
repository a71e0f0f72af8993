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

// Bound reports and their JSON / CSV forms.
//
// Each (instance, k) cell yields one row per algorithm, carrying every
// upper bound computed for the cell and value / bound ratios, plus one row
// per bound named "bound:<name>" whose value is the bound itself and whose
// evals / wall_ms measure the bound computation. Greedy guarantees
// (curvature, sharpness) appear only as ratios on the greedy row.

#ifndef SUBCERT_HARNESS_REPORT_H_
#define SUBCERT_HARNESS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcert/harness/config.h"

namespace subcert {

inline constexpr char kBoundRowPrefix[] = "bound:";

struct NamedValue {
  std::string name;
  double value = 0.0;
};

struct SeedValue {
  uint64_t seed = 0;
  double value = 0.0;
};

struct ReportRow {
  int k = 0;
  std::string algorithm;
  double value = 0.0;
  std::vector<NamedValue> bounds;
  std::vector<NamedValue> ratio;
  double evals = 0.0;
  std::optional<double> wall_ms;
  // Values behind an averaged row: per algorithm seed, or per instance
  // seed under a subsampling protocol.
  std::vector<SeedValue> per_seed;

  bool is_bound_row() const { return algorithm.rfind(kBoundRowPrefix, 0) == 0; }
  const NamedValue* FindBound(const std::string& name) const;
  const NamedValue* FindRatio(const std::string& name) const;
};

struct CellError {
  int k = 0;
  std::string cell;
  std::string message;
};

struct InstanceReport {
  std::string name;
  int64_t n = 0;
  std::vector<ReportRow> rows;
  std::vector<CellError> errors;

  const ReportRow* Find(int k, const std::string& algorithm) const;
};

struct BoundReport {
  std::string config_hash;
  std::vector<InstanceReport> instances;
  std::vector<std::string> warnings;

  bool has_errors() const;
};

nlohmann::ordered_json ReportToJson(const BoundReport& report);
BoundReport ReportFromJson(const nlohmann::ordered_json& j);
std::string ReportToCsv(const BoundReport& report);
std::string FormatReport(const BoundReport& report, ReportFormat format);

// Writes to `path`, or to stdout when the path is empty or "-". Throws
// Error when the file cannot be written.
void EmitReport(const BoundReport& report, ReportFormat format,
                const std::string& path);

// Rows where an algorithm value exceeds one of its upper bounds by more
// than 1e-6 * max(1, bound).
std::vector<std::string> CheckReportSoundness(const BoundReport& report);

// printf("%.10g").
std::string FormatReal(double x);

}  // namespace subcert

#endif  // SUBCERT_HARNESS_REPORT_H_
