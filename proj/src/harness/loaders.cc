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

#include "subcert/harness/loaders.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "subcert/error.h"

namespace subcert {
namespace {

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return in;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(std::string_view cell, double* out) {
  cell = Trim(cell);
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto [end, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), *out);
  return ec == std::errc() && end == cell.data() + cell.size();
}

// Whitespace-separated integer tokens of a line with comments removed.
std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

int64_t ParseId(const std::string& tok, int line) {
  int64_t value = 0;
  const auto [end, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  return value;
}

}  // namespace

BipartiteGraph ParseBipartite(std::istream& in,
                              std::vector<std::string>* warnings) {
  std::string line;
  int line_no = 0;
  int64_t primal = -1, dual = -1;
  std::vector<BipartiteGraph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = Tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) {
      throw ParseError("expected two fields, got " + std::to_string(tok.size()),
                       line_no);
    }
    const int64_t x = ParseId(tok[0], line_no);
    const int64_t y = ParseId(tok[1], line_no);
    if (primal < 0) {
      if (x < 1 || y < 1 || x > INT32_MAX || y > INT32_MAX) {
        throw ParseError("header needs positive |P| and |D|", line_no);
      }
      primal = x;
      dual = y;
      continue;
    }
    if (x < 0 || x >= primal) {
      throw ParseError("primal id " + tok[0] + " outside [0, " +
                           std::to_string(primal) + ")",
                       line_no);
    }
    if (y < 0 || y >= dual) {
      throw ParseError("dual id " + tok[1] + " outside [0, " +
                           std::to_string(dual) + ")",
                       line_no);
    }
    edges.emplace_back(static_cast<int32_t>(x), static_cast<int32_t>(y));
  }
  if (primal < 0) throw ParseError("missing '|P| |D|' header", 0);
  std::vector<bool> touched(dual, false);
  for (const auto& [a, b] : edges) touched[b] = true;
  for (int64_t b = 0; b < dual; ++b) {
    if (!touched[b]) {
      throw ParseError("dual element " + std::to_string(b) + " has no edge", 0);
    }
  }
  int64_t duplicates = 0;
  BipartiteGraph g = BipartiteGraph::FromEdges(
      static_cast<int32_t>(primal), static_cast<int32_t>(dual),
      std::move(edges), &duplicates);
  if (duplicates > 0 && warnings) {
    warnings->push_back("dropped " + std::to_string(duplicates) +
                        " duplicate edge(s)");
  }
  return g;
}

BipartiteGraph LoadBipartite(const std::string& path,
                             std::vector<std::string>* warnings) {
  std::ifstream in = Open(path);
  return ParseBipartite(in, warnings);
}

Matrix ParseMatrix(std::istream& in, bool header) {
  std::string line;
  int line_no = 0;
  bool skipped_header = !header;
  std::vector<double> data;
  int64_t cols = -1, rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    int64_t count = 0;
    std::string_view rest(line);
    while (true) {
      const size_t comma = rest.find(',');
      const std::string_view cell = rest.substr(0, comma);
      double value = 0.0;
      if (!ParseDouble(cell, &value)) {
        throw ParseError("non-numeric cell '" + std::string(Trim(cell)) + "'",
                         line_no);
      }
      data.push_back(value);
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cols < 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("row has " + std::to_string(count) + " cells, expected " +
                           std::to_string(cols),
                       line_no);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("matrix has no data rows", 0);
  Matrix m(rows, cols);
  for (int64_t r = 0; r < rows; ++r) {
    for (int64_t c = 0; c < cols; ++c) m(r, c) = data[r * cols + c];
  }
  return m;
}

Matrix LoadMatrix(const std::string& path, bool header) {
  std::ifstream in = Open(path);
  return ParseMatrix(in, header);
}

std::vector<double> LoadVector(const std::string& path) {
  std::ifstream in = Open(path);
  std::vector<double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream ss(line);
    for (std::string tok; ss >> tok;) {
      double value = 0.0;
      if (!ParseDouble(tok, &value)) {
        throw ParseError("non-numeric value '" + tok + "'", line_no);
      }
      out.push_back(value);
    }
  }
  return out;
}

}  // namespace subcert
