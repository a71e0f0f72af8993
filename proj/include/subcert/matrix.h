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

#ifndef SUBCERT_MATRIX_H_
#define SUBCERT_MATRIX_H_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "subcert/error.h"

namespace subcert {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int64_t rows, int64_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int64_t>(rows.size());
    cols_ = rows_ ? static_cast<int64_t>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int64_t>(r.size()) != cols_) {
        throw InvalidArgument("Matrix: ragged initializer");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double operator()(int64_t r, int64_t c) const { return data_[r * cols_ + c]; }
  double& operator()(int64_t r, int64_t c) { return data_[r * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }

 private:
  int64_t rows_ = 0;
  int64_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace subcert

#endif  // SUBCERT_MATRIX_H_
