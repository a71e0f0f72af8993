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

#include "subcert/harness/config.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "subcert/error.h"

namespace subcert {
namespace {

using nlohmann::json;

bool Contains(const std::vector<std::string>& names, const std::string& x) {
  return std::find(names.begin(), names.end(), x) != names.end();
}

template <typename T>
std::vector<T> ListOf(const json& j, const char* key) {
  if (!j.is_array()) {
    throw InvalidArgument(std::string("config: '") + key + "' must be a list");
  }
  try {
    return j.get<std::vector<T>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: bad '") + key + "': " + e.what());
  }
}

template <typename T>
T ScalarOf(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: bad '") + key + "': " + e.what());
  }
}

}  // namespace

ReportFormat ParseReportFormat(const std::string& text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  throw InvalidArgument("format must be csv or json, got '" + text + "'");
}

bool IsGuarantee(const std::string& bound) {
  return bound == "curvature" || bound == "curvature-exact" ||
         bound == "sharpness";
}

void ExperimentConfig::Validate() const {
  if (objectives.empty()) throw InvalidArgument("config: no objectives");
  if (k.empty()) throw InvalidArgument("config: empty k schedule");
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw InvalidArgument("config: k values must be >= 1");
    if (i > 0 && k[i] <= k[i - 1]) {
      throw InvalidArgument("config: k schedule must be strictly increasing");
    }
  }
  for (const auto& a : algorithms) {
    if (!Contains(KnownAlgorithms(), a)) {
      throw InvalidArgument("config: unknown algorithm '" + a + "'");
    }
  }
  for (const auto& b : bounds) {
    if (!Contains(KnownBounds(), b)) {
      throw InvalidArgument("config: unknown bound '" + b + "'");
    }
  }
  if (algorithms.empty()) throw InvalidArgument("config: no algorithms");
  if (seeds.empty()) throw InvalidArgument("config: no seeds");
  if (pivots) {
    for (int s : *pivots) {
      if (s < 0) throw InvalidArgument("config: pivot sizes must be >= 0");
    }
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("config: epsilon must be in (0, 1)");
  }
  if (threads < 1) throw InvalidArgument("config: threads must be >= 1");
  if (protocol) {
    if (protocol->n_per_k < 1) {
      throw InvalidArgument("config: protocol.n_per_k must be >= 1");
    }
    if (protocol->instance_seeds.empty()) {
      throw InvalidArgument("config: protocol.instance_seeds is empty");
    }
  }
}

json ExperimentConfig::ToJson() const {
  json j;
  j["objectives"] = objectives;
  j["k"] = k;
  j["algorithms"] = algorithms;
  j["bounds"] = bounds;
  j["pivots"] = pivots ? json(*pivots) : json(nullptr);
  j["seeds"] = seeds;
  j["cap"] = cap;
  j["epsilon"] = epsilon;
  j["timing"] = timing;
  if (protocol) {
    j["protocol"] = {{"n_per_k", protocol->n_per_k},
                     {"instance_seeds", protocol->instance_seeds}};
  } else {
    j["protocol"] = nullptr;
  }
  return j;
}

std::string ExperimentConfig::Hash() const {
  // 64-bit FNV-1a over the canonical (key-sorted) JSON text.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : ToJson().dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config: top level must be a table");
  ExperimentConfig c;
  static const std::set<std::string> kKeys = {
      "objective", "objectives", "k",       "algorithms", "bounds",
      "pivots",    "seeds",      "cap",     "epsilon",    "threads",
      "timing",    "output",     "format",  "protocol"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) {
      throw InvalidArgument("config: unknown key '" + key + "'");
    }
  }
  if (j.contains("objective")) {
    c.objectives.push_back(ScalarOf<std::string>(j["objective"], "objective"));
  }
  if (j.contains("objectives")) {
    for (auto& s : ListOf<std::string>(j["objectives"], "objectives")) {
      c.objectives.push_back(s);
    }
  }
  if (j.contains("k")) {
    c.k = j["k"].is_array() ? ListOf<int>(j["k"], "k")
                            : std::vector<int>{ScalarOf<int>(j["k"], "k")};
  }
  if (j.contains("algorithms")) {
    c.algorithms = ListOf<std::string>(j["algorithms"], "algorithms");
  }
  if (j.contains("bounds")) c.bounds = ListOf<std::string>(j["bounds"], "bounds");
  if (j.contains("pivots")) c.pivots = ListOf<int>(j["pivots"], "pivots");
  if (j.contains("seeds")) c.seeds = ListOf<uint64_t>(j["seeds"], "seeds");
  if (j.contains("cap")) c.cap = ScalarOf<uint64_t>(j["cap"], "cap");
  if (j.contains("epsilon")) c.epsilon = ScalarOf<double>(j["epsilon"], "epsilon");
  if (j.contains("threads")) c.threads = ScalarOf<int>(j["threads"], "threads");
  if (j.contains("timing")) c.timing = ScalarOf<bool>(j["timing"], "timing");
  if (j.contains("output")) c.output = ScalarOf<std::string>(j["output"], "output");
  if (j.contains("format")) {
    c.format = ParseReportFormat(ScalarOf<std::string>(j["format"], "format"));
  }
  if (j.contains("protocol")) {
    const json& p = j["protocol"];
    if (!p.is_object()) throw InvalidArgument("config: protocol must be a table");
    SubsampleProtocol proto;
    for (const auto& [key, value] : p.items()) {
      if (key == "n_per_k") {
        proto.n_per_k = ScalarOf<int>(value, "protocol.n_per_k");
      } else if (key == "instance_seeds") {
        proto.instance_seeds =
            ListOf<uint64_t>(value, "protocol.instance_seeds");
      } else {
        throw InvalidArgument("config: unknown key 'protocol." + key + "'");
      }
    }
    c.protocol = proto;
  }
  c.Validate();
  return c;
}

ExperimentConfig ParseConfig(const std::string& text, bool toml_syntax) {
  if (!toml_syntax) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("config JSON: ") + e.what(), 0);
    }
    return ConfigFromJson(j);
  }
  toml::table table;
  try {
    table = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw ParseError(std::string("config TOML: ") + std::string(e.description()),
                     static_cast<int>(e.source().begin.line));
  }
  std::ostringstream as_json;
  as_json << toml::json_formatter{table};
  return ConfigFromJson(json::parse(as_json.str()));
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool toml_syntax =
      path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  return ParseConfig(buf.str(), toml_syntax);
}

}  // namespace subcert
