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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "subcert/benchmarks.h"
#include "subcert/dual_coverage.h"
#include "subcert/dual_submodular.h"
#include "subcert/error.h"
#include "subcert/harness/config.h"
#include "subcert/harness/objective_spec.h"
#include "subcert/harness/report.h"
#include "subcert/harness/runner.h"
#include "subcert/maximizers.h"
#include "subcert/validity.h"

namespace py = pybind11;

namespace subcert {
namespace {

ElementSet ToSet(const std::vector<ElementId>& ids) {
  return ElementSet::FromUnsorted(ids);
}

std::vector<ElementId> ToList(const ElementSet& s) {
  return std::vector<ElementId>(s.begin(), s.end());
}

py::dict TraceDict(const GreedyTrace& t) {
  py::dict d;
  d["chosen"] = t.chosen;
  d["values"] = t.values;
  d["gains"] = t.gains;
  return d;
}

const BipartiteGraph& GraphOf(const Objective& obj) {
  if (!obj.graph) {
    throw InvalidArgument(obj.name + " is not an unweighted coverage objective");
  }
  return *obj.graph;
}

double DualBound(const Objective& obj, int k,
                 std::optional<std::vector<std::vector<ElementId>>> pivots,
                 int threads) {
  if (pivots) {
    std::vector<ElementSet> sets;
    for (const auto& p : *pivots) sets.push_back(ToSet(p));
    return Dual(obj.oracle, k, sets, threads).bound;
  }
  const GreedyTrace trace =
      Greedy(*obj.oracle, std::min<int>(obj.oracle->n(), std::max(k, 50)));
  std::vector<int> sizes = PivotSizes(trace, DefaultPivotSchedule());
  sizes.push_back(k);
  return DualFromTrace(obj.oracle, k, trace, sizes, threads).bound;
}

std::string RunConfig(const std::string& text, bool toml, uint64_t seed) {
  const ExperimentConfig config = ParseConfig(text, toml);
  BoundReport report;
  {
    py::gil_scoped_release release;
    report = Run(config, seed);
  }
  return ReportToJson(report).dump();
}

}  // namespace
}  // namespace subcert

PYBIND11_MODULE(_subcert, m) {
  using namespace subcert;
  m.doc() = "Upper bounds for monotone submodular maximization.";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<InfeasibleError> infeasible(m, "InfeasibleError",
                                                   error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InfeasibleError& e) {
      py::set_error(infeasible, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Objective>(m, "Objective")
      .def_readonly("name", &Objective::name)
      .def_readonly("warnings", &Objective::warnings)
      .def_property_readonly("n", [](const Objective& o) { return o.oracle->n(); })
      .def_property_readonly("is_coverage",
                             [](const Objective& o) { return o.graph != nullptr; })
      .def(
          "evaluate",
          [](const Objective& o, const std::vector<ElementId>& s) {
            const ElementSet set = ToSet(s);
            set.CheckRange(o.oracle->n());
            return o.oracle->Evaluate(set);
          },
          py::arg("elements"))
      .def("__repr__",
           [](const Objective& o) { return "<Objective " + o.name + ">"; });

  m.def("build_objective",
        py::overload_cast<const std::string&, uint64_t>(&BuildObjective),
        py::arg("spec"), py::arg("seed") = 0);

  m.def(
      "greedy",
      [](const Objective& o, int k) { return TraceDict(Greedy(*o.oracle, k)); },
      py::arg("objective"), py::arg("k"));
  m.def(
      "local_search",
      [](const Objective& o, int k) { return ToList(LocalSearch(*o.oracle, k)); },
      py::arg("objective"), py::arg("k"));
  m.def(
      "brute_force",
      [](const Objective& o, int k, uint64_t cap) {
        const ExactOptimum opt = BruteForceOpt(*o.oracle, k, cap);
        return py::make_tuple(opt.value, ToList(opt.set));
      },
      py::arg("objective"), py::arg("k"), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "method1",
      [](const Objective& o, int k) { return AdditiveDualBound(GraphOf(o), k) - 1; },
      py::arg("objective"), py::arg("k"));
  m.def(
      "method2",
      [](const Objective& o, int k) {
        return PartitionDualBound(GraphOf(o), k, nullptr);
      },
      py::arg("objective"), py::arg("k"));
  m.def(
      "method3",
      [](const Objective& o, int k) { return Method3(*o.oracle, k).bound; },
      py::arg("objective"), py::arg("k"));
  m.def("dual", &DualBound, py::arg("objective"), py::arg("k"),
        py::arg("pivots") = py::none(), py::arg("threads") = 1);
  m.def(
      "topk", [](const Objective& o, int k) { return TopkBound(*o.oracle, k); },
      py::arg("objective"), py::arg("k"));
  m.def(
      "marginal",
      [](const Objective& o, int k) {
        return MarginalBound(Greedy(*o.oracle, k), k);
      },
      py::arg("objective"), py::arg("k"));

  m.def(
      "validate",
      [](const Objective& o, int triples, uint64_t seed, double tolerance) {
        const ValidityReport r =
            CheckValidity(*o.oracle, triples, RandomSeed{seed}, tolerance);
        py::dict d;
        d["ok"] = r.ok();
        d["triples"] = r.triples;
        d["monotone_violations"] = r.monotone_violations;
        d["submodular_violations"] = r.submodular_violations;
        d["first_failure"] = r.first_failure;
        return d;
      },
      py::arg("objective"), py::arg("triples") = 1000, py::arg("seed") = 0,
      py::arg("tolerance") = 1e-9);

  m.def("run_config", &RunConfig, py::arg("text"), py::arg("toml") = true,
        py::arg("seed") = 0);
}
