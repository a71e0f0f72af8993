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

// File formats.
//
// Bipartite edge list:
//   # comments run to end of line
//   |P| |D|
//   a b        (0-based primal id, dual id), one edge per line
//
// Matrix: comma-separated reals, one row per line, optionally preceded by a
// single header row.

#ifndef SUBCERT_HARNESS_LOADERS_H_
#define SUBCERT_HARNESS_LOADERS_H_

#include <istream>
#include <string>
#include <vector>

#include "subcert/bipartite_graph.h"
#include "subcert/matrix.h"

namespace subcert {

// Throws ParseError (with line number) on malformed input and when a dual
// element has no edge. Duplicate edges are dropped with a warning.
BipartiteGraph ParseBipartite(std::istream& in,
                              std::vector<std::string>* warnings = nullptr);
BipartiteGraph LoadBipartite(const std::string& path,
                             std::vector<std::string>* warnings = nullptr);

// Throws ParseError on ragged rows, non-numeric cells and empty input.
Matrix ParseMatrix(std::istream& in, bool header = false);
Matrix LoadMatrix(const std::string& path, bool header = false);

// Reals separated by commas, whitespace or newlines.
std::vector<double> LoadVector(const std::string& path);

}  // namespace subcert

#endif  // SUBCERT_HARNESS_LOADERS_H_
