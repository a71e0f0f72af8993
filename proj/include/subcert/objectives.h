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

// Built-in objective families. Ratings-style matrices are laid out with one
// row per user (or observation) and one column per ground-set element.

#ifndef SUBCERT_OBJECTIVES_H_
#define SUBCERT_OBJECTIVES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "subcert/bipartite_graph.h"
#include "subcert/matrix.h"
#include "subcert/oracle.h"

namespace subcert {

// f(S) = |N(S)|, the number of dual elements adjacent to S.
class CoverageOracle final : public Oracle {
 public:
  explicit CoverageOracle(std::shared_ptr<const BipartiteGraph> graph);

  ElementId n() const override { return graph_->primal_count(); }
  std::string name() const override { return "coverage"; }
  std::unique_ptr<OracleState> NewState() const override;
  double Evaluate(const ElementSet& s) const override {
    return static_cast<double>(Count(s));
  }

  // Exact integer evaluation.
  int64_t Count(const ElementSet& s) const;
  const BipartiteGraph& graph() const { return *graph_; }
  std::shared_ptr<const BipartiteGraph> shared_graph() const { return graph_; }

 private:
  std::shared_ptr<const BipartiteGraph> graph_;
};

// f(S) = sum of weights of the dual elements adjacent to S.
class WeightedCoverageOracle final : public Oracle {
 public:
  WeightedCoverageOracle(std::shared_ptr<const BipartiteGraph> graph,
                         std::vector<double> weights);

  ElementId n() const override { return graph_->primal_count(); }
  std::string name() const override { return "weighted-coverage"; }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  std::shared_ptr<const BipartiteGraph> graph_;
  std::vector<double> weights_;
};

// f(S) = (1/m) sum over rows i of max_{j in S} r_ij; f({}) = 0.
class FacilityLocationOracle final : public Oracle {
 public:
  explicit FacilityLocationOracle(const Matrix& ratings);

  ElementId n() const override { return n_; }
  std::string name() const override { return "facility-location"; }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  friend class FacilityLocationState;
  ElementId n_;
  int64_t m_;
  std::vector<double> by_element_;  // n x m, element-major
};

// f(S) = sum_{j in S} sum_i r_ij + #{users i : exists j in S, r_ij > t}.
class MovieRecommendationOracle final : public Oracle {
 public:
  explicit MovieRecommendationOracle(const Matrix& ratings,
                                     double threshold = 4.5);

  ElementId n() const override { return n_; }
  std::string name() const override { return "movie-recommendation"; }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  friend class MovieRecommendationState;
  ElementId n_;
  int64_t m_;
  std::vector<double> column_sums_;
  std::vector<std::vector<int32_t>> fans_;  // users rating above threshold
};

// f(S) = ((1/m) sum_i sum_{j in S} r_ij)^alpha, the small-instance movie
// objective. Nonnegative ratings and alpha in (0, 1].
class ConcaveRatingsOracle final : public Oracle {
 public:
  ConcaveRatingsOracle(const Matrix& ratings, double alpha = 0.8);

  ElementId n() const override {
    return static_cast<ElementId>(column_means_.size());
  }
  std::string name() const override { return "concave-ratings"; }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  friend class ConcaveRatingsState;
  std::vector<double> column_means_;
  double alpha_;
};

// f(S) = sum_i (sum_{j in S} w_ij)^alpha with 0^alpha = 0.
class RevenueOracle final : public Oracle {
 public:
  RevenueOracle(const Matrix& weights, double alpha = 0.9);

  ElementId n() const override { return n_; }
  std::string name() const override { return "revenue"; }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  friend class RevenueState;
  ElementId n_;
  int64_t rows_;
  double alpha_;
  std::vector<double> by_element_;  // n x rows, element-major
};

// Empirical joint entropy (natural log) of the selected columns of a
// discrete observation matrix. With a label column, f(S) = H(X_S, Y) and
// f({}) = H(Y). Cell values are treated as category labels.
class EntropyOracle final : public Oracle {
 public:
  explicit EntropyOracle(const Matrix& samples,
                         std::optional<std::vector<double>> label = {});

  ElementId n() const override {
    return static_cast<ElementId>(codes_.size());
  }
  std::string name() const override {
    return has_label_ ? "joint-entropy" : "entropy";
  }
  std::unique_ptr<OracleState> NewState() const override;

 private:
  friend class EntropyState;
  int64_t m_;
  bool has_label_;
  std::vector<std::vector<int32_t>> codes_;  // per column, per row
  std::vector<int32_t> levels_;
  std::vector<int32_t> label_codes_;
};

// f(S) = sum_{a in S} values[a].
class AdditiveOracle final : public Oracle {
 public:
  explicit AdditiveOracle(std::vector<double> values);

  ElementId n() const override {
    return static_cast<ElementId>(values_.size());
  }
  std::string name() const override { return "additive"; }
  std::unique_ptr<OracleState> NewState() const override;

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Instance on which the value-partition bound alone is poor. Elements
// 0..m-1 form the block B (f(b) = c, any further b adds 1) and m..2m-1 the
// block G (f(g) = c/2, each g adds 2 once some b is present). In terms of
// x = |S n B| and y = |S n G|:
//   f(0, 0) = 0,  f(0, y) = c/2 + 2(y - 1),  f(x >= 1, y) = c + (x - 1) + 2y.
// Submodular iff c >= 4.
class AdversarialOracle final : public Oracle {
 public:
  AdversarialOracle(ElementId block_size, double c);

  ElementId n() const override { return 2 * block_size_; }
  std::string name() const override { return "adversarial"; }
  std::unique_ptr<OracleState> NewState() const override;

  ElementId block_size() const { return block_size_; }
  double c() const { return c_; }
  double ValueOfCounts(int64_t x, int64_t y) const;

 private:
  ElementId block_size_;
  double c_;
};

// Adversarial instance with block size `n`. Requires n >= k so greedy can
// fill k slots.
std::shared_ptr<const AdversarialOracle> AdversarialInstance(ElementId n,
                                                             double c,
                                                             int k);

}  // namespace subcert

#endif  // SUBCERT_OBJECTIVES_H_
