# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Upper bounds for monotone submodular maximization."""

import json

from subcert._subcert import (
    Error,
    InfeasibleError,
    Objective,
    brute_force,
    build_objective,
    dual,
    greedy,
    local_search,
    marginal,
    method1,
    method2,
    method3,
    run_config,
    topk,
    validate,
)


def run(config, toml=True, seed=0):
    """Runs an experiment config given as TOML or JSON text; returns the report."""
    return json.loads(run_config(config, toml, seed))


__all__ = [
    "Error",
    "InfeasibleError",
    "Objective",
    "brute_force",
    "build_objective",
    "dual",
    "greedy",
    "local_search",
    "marginal",
    "method1",
    "method2",
    "method3",
    "run",
    "run_config",
    "topk",
    "validate",
]
