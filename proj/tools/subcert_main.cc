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

// subcert: upper-bound certificates for monotone submodular maximization.
//
//   subcert run --config sweep.toml [--out report.json] [--format json]
//   subcert bound --objective coverage:path=g.txt --method dual --k 1,5,10
//   subcert validate --objective random-revenue:n=30,seed=1
//
// Exit status: 0 on success, 1 when some report cell or validity check
// failed, 2 on usage and input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcert/error.h"
#include "subcert/harness/config.h"
#include "subcert/harness/objective_spec.h"
#include "subcert/harness/report.h"
#include "subcert/harness/runner.h"
#include "subcert/validity.h"

namespace {

struct CommonFlags {
  uint64_t seed = 0;
  std::optional<uint64_t> cap;
  std::string out;
  std::optional<std::string> format;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed,
                  "Seed for generated objectives without a seed parameter");
  cmd->add_option("--cap", flags->cap, "Enumeration cap for exact methods");
  cmd->add_option("--out", flags->out, "Output path (default: stdout)");
  cmd->add_option("--format", flags->format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
}

int Finish(const subcert::BoundReport& report, const subcert::ExperimentConfig& config) {
  subcert::EmitReport(report, config.format, config.output);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  int failed = 0;
  for (const auto& inst : report.instances) {
    for (const auto& e : inst.errors) {
      std::cerr << "error: " << inst.name << " k=" << e.k << " [" << e.cell
                << "]: " << e.message << "\n";
      ++failed;
    }
  }
  for (const auto& p : subcert::CheckReportSoundness(report)) {
    std::cerr << "unsound: " << p << "\n";
    ++failed;
  }
  return failed > 0 ? 1 : 0;
}

void ApplyCommon(const CommonFlags& flags, subcert::ExperimentConfig* config) {
  if (flags.cap) config->cap = *flags.cap;
  if (!flags.out.empty()) config->output = flags.out;
  if (flags.format) config->format = subcert::ParseReportFormat(*flags.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instance-specific upper bounds for submodular maximization"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string config_path;
  std::optional<int> threads;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("--config", config_path, "TOML or JSON config")->required();
  run->add_option("--threads", threads, "Worker threads over cells");
  run->add_flag("--no-timing", no_timing, "Omit wall times from the report");
  AddCommonFlags(run, &run_flags);

  CommonFlags bound_flags;
  std::string objective;
  std::string method;
  std::vector<int> ks;
  std::vector<std::string> algorithms = {"greedy"};
  std::optional<std::vector<int>> pivots;
  bool bound_no_timing = false;
  auto* bound = app.add_subcommand("bound", "Compute one bound for a list of k");
  bound->add_option("--objective", objective, "Objective spec")->required();
  bound->add_option("--method", method, "Bound to compute")
      ->required()
      ->check(CLI::IsMember(subcert::KnownBounds()));
  bound->add_option("--k", ks, "Cardinalities, e.g. 1,5,10")
      ->required()
      ->delimiter(',');
  bound->add_option("--algorithms", algorithms,
                    "Algorithms to certify (default greedy)")
      ->delimiter(',')
      ->check(CLI::IsMember(subcert::KnownAlgorithms()));
  bound->add_option("--pivots", pivots, "Greedy prefix sizes used by dual")
      ->delimiter(',');
  bound->add_flag("--no-timing", bound_no_timing,
                  "Omit wall times from the report");
  AddCommonFlags(bound, &bound_flags);

  std::string validate_objective;
  uint64_t validate_seed = 0;
  int triples = 1000;
  double tolerance = 1e-9;
  auto* validate = app.add_subcommand(
      "validate", "Sample monotonicity and diminishing-returns triples");
  validate->add_option("--objective", validate_objective, "Objective spec")
      ->required();
  validate->add_option("--seed", validate_seed, "Sampling and generator seed");
  validate->add_option("--triples", triples, "Number of sampled triples")
      ->check(CLI::PositiveNumber);
  validate->add_option("--tolerance", tolerance, "Relative tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      subcert::ExperimentConfig config = subcert::LoadConfig(config_path);
      ApplyCommon(run_flags, &config);
      if (threads) config.threads = *threads;
      if (no_timing) config.timing = false;
      config.Validate();
      return Finish(subcert::Run(config, run_flags.seed), config);
    }
    if (*bound) {
      subcert::ExperimentConfig config;
      config.objectives = {objective};
      config.k = ks;
      config.algorithms = algorithms;
      config.bounds = {method};
      config.pivots = pivots;
      config.seeds = {bound_flags.seed};
      config.timing = !bound_no_timing;
      ApplyCommon(bound_flags, &config);
      config.Validate();
      return Finish(subcert::Run(config, bound_flags.seed), config);
    }
    if (*validate) {
      const subcert::Objective obj =
          subcert::BuildObjective(validate_objective, validate_seed);
      const subcert::ValidityReport r = subcert::CheckValidity(
          *obj.oracle, triples, subcert::RandomSeed{validate_seed}, tolerance);
      std::cout << obj.name << ": n=" << obj.oracle->n()
                << " triples=" << r.triples << "\n"
                << "monotone: " << (r.monotone_violations ? "FAIL" : "ok")
                << " (violations=" << r.monotone_violations
                << ", worst=" << subcert::FormatReal(r.worst_monotone) << ")\n"
                << "submodular: " << (r.submodular_violations ? "FAIL" : "ok")
                << " (violations=" << r.submodular_violations
                << ", worst=" << subcert::FormatReal(r.worst_submodular)
                << ")\n";
      if (!r.ok()) std::cout << "first failure: " << r.first_failure << "\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const subcert::Error& e) {
    std::cerr << "subcert: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
