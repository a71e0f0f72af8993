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

#include "subcert/harness/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subcert/error.h"

namespace subcert {
namespace {

using nlohmann::ordered_json;

const NamedValue* FindNamed(const std::vector<NamedValue>& values,
                            const std::string& name) {
  for (const auto& v : values) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

ordered_json Real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json NamedMap(const std::vector<NamedValue>& values) {
  ordered_json out = ordered_json::object();
  for (const auto& v : values) out[v.name] = Real(v.value);
  return out;
}

void AddUnique(std::vector<std::string>* names, const std::string& name) {
  if (std::find(names->begin(), names->end(), name) == names->end()) {
    names->push_back(name);
  }
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

double RealFrom(const ordered_json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

const NamedValue* ReportRow::FindBound(const std::string& name) const {
  return FindNamed(bounds, name);
}

const NamedValue* ReportRow::FindRatio(const std::string& name) const {
  return FindNamed(ratio, name);
}

const ReportRow* InstanceReport::Find(int k,
                                      const std::string& algorithm) const {
  for (const auto& row : rows) {
    if (row.k == k && row.algorithm == algorithm) return &row;
  }
  return nullptr;
}

bool BoundReport::has_errors() const {
  for (const auto& inst : instances) {
    if (!inst.errors.empty()) return true;
  }
  return false;
}

std::string FormatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

ordered_json ReportToJson(const BoundReport& report) {
  ordered_json out;
  out["config_hash"] = report.config_hash;
  out["instances"] = ordered_json::array();
  for (const auto& inst : report.instances) {
    ordered_json ji;
    ji["name"] = inst.name;
    ji["n"] = inst.n;
    ji["rows"] = ordered_json::array();
    for (const auto& row : inst.rows) {
      ordered_json jr;
      jr["k"] = row.k;
      jr["algorithm"] = row.algorithm;
      jr["value"] = Real(row.value);
      jr["bounds"] = NamedMap(row.bounds);
      jr["ratio"] = NamedMap(row.ratio);
      jr["evals"] = Real(row.evals);
      jr["wall_ms"] = row.wall_ms ? Real(*row.wall_ms) : ordered_json(nullptr);
      if (!row.per_seed.empty()) {
        jr["per_seed"] = ordered_json::array();
        for (const auto& s : row.per_seed) {
          jr["per_seed"].push_back({{"seed", s.seed}, {"value", Real(s.value)}});
        }
      }
      ji["rows"].push_back(std::move(jr));
    }
    if (!inst.errors.empty()) {
      ji["errors"] = ordered_json::array();
      for (const auto& e : inst.errors) {
        ji["errors"].push_back(
            {{"k", e.k}, {"cell", e.cell}, {"message", e.message}});
      }
    }
    out["instances"].push_back(std::move(ji));
  }
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  return out;
}

BoundReport ReportFromJson(const ordered_json& j) {
  BoundReport report;
  try {
    report.config_hash = j.at("config_hash").get<std::string>();
    for (const auto& ji : j.at("instances")) {
      InstanceReport inst;
      inst.name = ji.at("name").get<std::string>();
      inst.n = ji.at("n").get<int64_t>();
      for (const auto& jr : ji.at("rows")) {
        ReportRow row;
        row.k = jr.at("k").get<int>();
        row.algorithm = jr.at("algorithm").get<std::string>();
        row.value = RealFrom(jr.at("value"));
        for (const auto& [name, v] : jr.at("bounds").items()) {
          row.bounds.push_back({name, RealFrom(v)});
        }
        for (const auto& [name, v] : jr.at("ratio").items()) {
          row.ratio.push_back({name, RealFrom(v)});
        }
        row.evals = RealFrom(jr.at("evals"));
        if (!jr.at("wall_ms").is_null()) row.wall_ms = RealFrom(jr["wall_ms"]);
        if (jr.contains("per_seed")) {
          for (const auto& s : jr["per_seed"]) {
            row.per_seed.push_back(
                {s.at("seed").get<uint64_t>(), RealFrom(s.at("value"))});
          }
        }
        inst.rows.push_back(std::move(row));
      }
      if (ji.contains("errors")) {
        for (const auto& e : ji["errors"]) {
          inst.errors.push_back({e.at("k").get<int>(),
                                 e.at("cell").get<std::string>(),
                                 e.at("message").get<std::string>()});
        }
      }
      report.instances.push_back(std::move(inst));
    }
    if (j.contains("warnings")) {
      report.warnings = j["warnings"].get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 0);
  }
  return report;
}

std::string ReportToCsv(const BoundReport& report) {
  // Column set in first-appearance order, which follows the config order.
  std::vector<std::string> bound_names, ratio_names;
  for (const auto& inst : report.instances) {
    for (const auto& row : inst.rows) {
      for (const auto& b : row.bounds) AddUnique(&bound_names, b.name);
      for (const auto& r : row.ratio) AddUnique(&ratio_names, r.name);
    }
  }
  std::ostringstream out;
  out << "instance,n,k,algorithm,value,evals,wall_ms";
  for (const auto& b : bound_names) out << ",bound." << b;
  for (const auto& r : ratio_names) out << ",ratio." << r;
  out << "\n";
  for (const auto& inst : report.instances) {
    for (const auto& row : inst.rows) {
      out << CsvQuote(inst.name) << ',' << inst.n << ',' << row.k << ','
          << CsvQuote(row.algorithm) << ',' << FormatReal(row.value) << ','
          << FormatReal(row.evals) << ','
          << (row.wall_ms ? FormatReal(*row.wall_ms) : "");
      for (const auto& b : bound_names) {
        const NamedValue* v = row.FindBound(b);
        out << ',' << (v ? FormatReal(v->value) : "");
      }
      for (const auto& r : ratio_names) {
        const NamedValue* v = row.FindRatio(r);
        out << ',' << (v ? FormatReal(v->value) : "");
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string FormatReport(const BoundReport& report, ReportFormat format) {
  if (format == ReportFormat::kCsv) return ReportToCsv(report);
  return ReportToJson(report).dump(2) + "\n";
}

void EmitReport(const BoundReport& report, ReportFormat format,
                const std::string& path) {
  const std::string text = FormatReport(report, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report to " + path);
  out << text;
  out.close();
  if (!out) throw Error("failed writing report to " + path);
}

std::vector<std::string> CheckReportSoundness(const BoundReport& report) {
  std::vector<std::string> problems;
  for (const auto& inst : report.instances) {
    for (const auto& row : inst.rows) {
      if (row.is_bound_row()) continue;
      for (const auto& b : row.bounds) {
        if (row.value > b.value + 1e-6 * std::max(1.0, b.value)) {
          std::ostringstream msg;
          msg << inst.name << " k=" << row.k << ": " << row.algorithm << " = "
              << FormatReal(row.value) << " exceeds " << b.name << " = "
              << FormatReal(b.value);
          problems.push_back(msg.str());
        }
      }
    }
  }
  return problems;
}

}  // namespace subcert
