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

#include "subcert/objectives.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "subcert/error.h"

namespace subcert {
namespace {

void CheckNonnegative(const Matrix& m, const char* what) {
  for (double x : m.data()) {
    if (!(x >= 0.0)) {
      throw InvalidArgument(std::string(what) + ": entries must be >= 0");
    }
  }
}

void CheckAlpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument(std::string(what) + ": alpha must be in (0, 1]");
  }
}

// 0^alpha = 0 for alpha in (0, 1].
double Power(double x, double alpha) {
  return x <= 0.0 ? 0.0 : (alpha == 1.0 ? x : std::pow(x, alpha));
}

}  // namespace

// ---------------------------------------------------------------------------
// Coverage

namespace {

class CoverageState final : public OracleState {
 public:
  explicit CoverageState(const BipartiteGraph& g)
      : g_(&g), in_set_(g.primal_count(), 0), covered_(g.dual_count(), 0) {}

  double Value() const override { return static_cast<double>(count_); }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    int64_t gain = 0;
    for (int32_t b : g_->PrimalNeighbors(a)) gain += covered_[b] ? 0 : 1;
    return static_cast<double>(gain);
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    for (int32_t b : g_->PrimalNeighbors(a)) {
      if (!covered_[b]) {
        covered_[b] = 1;
        ++count_;
      }
    }
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<CoverageState>(*this);
  }

 private:
  const BipartiteGraph* g_;
  std::vector<char> in_set_;
  std::vector<char> covered_;
  int64_t count_ = 0;
};

class WeightedCoverageState final : public OracleState {
 public:
  WeightedCoverageState(const BipartiteGraph& g,
                        const std::vector<double>& weights)
      : g_(&g),
        weights_(&weights),
        in_set_(g.primal_count(), 0),
        covered_(g.dual_count(), 0) {}

  double Value() const override { return value_; }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    double gain = 0.0;
    for (int32_t b : g_->PrimalNeighbors(a)) {
      if (!covered_[b]) gain += (*weights_)[b];
    }
    return gain;
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    for (int32_t b : g_->PrimalNeighbors(a)) {
      if (!covered_[b]) {
        covered_[b] = 1;
        value_ += (*weights_)[b];
      }
    }
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<WeightedCoverageState>(*this);
  }

 private:
  const BipartiteGraph* g_;
  const std::vector<double>* weights_;
  std::vector<char> in_set_;
  std::vector<char> covered_;
  double value_ = 0.0;
};

}  // namespace

CoverageOracle::CoverageOracle(std::shared_ptr<const BipartiteGraph> graph)
    : graph_(std::move(graph)) {
  if (!graph_) throw InvalidArgument("CoverageOracle: null graph");
}

std::unique_ptr<OracleState> CoverageOracle::NewState() const {
  return std::make_unique<CoverageState>(*graph_);
}

int64_t CoverageOracle::Count(const ElementSet& s) const {
  s.CheckRange(n());
  std::vector<char> covered(graph_->dual_count(), 0);
  int64_t count = 0;
  for (ElementId a : s) {
    for (int32_t b : graph_->PrimalNeighbors(a)) {
      if (!covered[b]) {
        covered[b] = 1;
        ++count;
      }
    }
  }
  return count;
}

WeightedCoverageOracle::WeightedCoverageOracle(
    std::shared_ptr<const BipartiteGraph> graph, std::vector<double> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (!graph_) throw InvalidArgument("WeightedCoverageOracle: null graph");
  if (static_cast<int64_t>(weights_.size()) != graph_->dual_count()) {
    throw InvalidArgument("WeightedCoverageOracle: expected " +
                          std::to_string(graph_->dual_count()) +
                          " weights, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw InvalidArgument("WeightedCoverageOracle: weights must be >= 0");
    }
  }
}

std::unique_ptr<OracleState> WeightedCoverageOracle::NewState() const {
  return std::make_unique<WeightedCoverageState>(*graph_, weights_);
}

// ---------------------------------------------------------------------------
// Facility location

class FacilityLocationState final : public OracleState {
 public:
  explicit FacilityLocationState(const FacilityLocationOracle& o)
      : o_(&o), best_(o.m_, 0.0) {}

  double Value() const override {
    return sum_ / static_cast<double>(o_->m_);
  }
  double Gain(ElementId a) const override {
    const double* col = o_->by_element_.data() + a * o_->m_;
    double gain = 0.0;
    for (int64_t i = 0; i < o_->m_; ++i) {
      if (col[i] > best_[i]) gain += col[i] - best_[i];
    }
    return gain / static_cast<double>(o_->m_);
  }
  void Add(ElementId a) override {
    const double* col = o_->by_element_.data() + a * o_->m_;
    for (int64_t i = 0; i < o_->m_; ++i) {
      if (col[i] > best_[i]) {
        sum_ += col[i] - best_[i];
        best_[i] = col[i];
      }
    }
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<FacilityLocationState>(*this);
  }

 private:
  const FacilityLocationOracle* o_;
  std::vector<double> best_;
  double sum_ = 0.0;
};

FacilityLocationOracle::FacilityLocationOracle(const Matrix& ratings) {
  if (ratings.empty()) {
    throw InvalidArgument("FacilityLocationOracle: empty ratings matrix");
  }
  CheckNonnegative(ratings, "FacilityLocationOracle");
  n_ = static_cast<ElementId>(ratings.cols());
  m_ = ratings.rows();
  by_element_.resize(n_ * m_);
  for (int64_t i = 0; i < m_; ++i) {
    for (ElementId j = 0; j < n_; ++j) by_element_[j * m_ + i] = ratings(i, j);
  }
}

std::unique_ptr<OracleState> FacilityLocationOracle::NewState() const {
  return std::make_unique<FacilityLocationState>(*this);
}

// ---------------------------------------------------------------------------
// Movie recommendation

class MovieRecommendationState final : public OracleState {
 public:
  explicit MovieRecommendationState(const MovieRecommendationOracle& o)
      : o_(&o), in_set_(o.n_, 0), covered_(o.m_, 0) {}

  double Value() const override {
    return additive_ + static_cast<double>(covered_count_);
  }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    int64_t fresh = 0;
    for (int32_t u : o_->fans_[a]) fresh += covered_[u] ? 0 : 1;
    return o_->column_sums_[a] + static_cast<double>(fresh);
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    additive_ += o_->column_sums_[a];
    for (int32_t u : o_->fans_[a]) {
      if (!covered_[u]) {
        covered_[u] = 1;
        ++covered_count_;
      }
    }
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<MovieRecommendationState>(*this);
  }

 private:
  const MovieRecommendationOracle* o_;
  std::vector<char> in_set_;
  std::vector<char> covered_;
  double additive_ = 0.0;
  int64_t covered_count_ = 0;
};

MovieRecommendationOracle::MovieRecommendationOracle(const Matrix& ratings,
                                                     double threshold) {
  if (ratings.empty()) {
    throw InvalidArgument("MovieRecommendationOracle: empty ratings matrix");
  }
  CheckNonnegative(ratings, "MovieRecommendationOracle");
  n_ = static_cast<ElementId>(ratings.cols());
  m_ = ratings.rows();
  column_sums_.assign(n_, 0.0);
  fans_.resize(n_);
  for (ElementId j = 0; j < n_; ++j) {
    for (int64_t i = 0; i < m_; ++i) {
      column_sums_[j] += ratings(i, j);
      if (ratings(i, j) > threshold) {
        fans_[j].push_back(static_cast<int32_t>(i));
      }
    }
  }
}

std::unique_ptr<OracleState> MovieRecommendationOracle::NewState() const {
  return std::make_unique<MovieRecommendationState>(*this);
}

// ---------------------------------------------------------------------------
// Concave-of-ratings

class ConcaveRatingsState final : public OracleState {
 public:
  explicit ConcaveRatingsState(const ConcaveRatingsOracle& o)
      : o_(&o), in_set_(o.n(), 0) {}

  double Value() const override { return Power(total_, o_->alpha_); }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    return Power(total_ + o_->column_means_[a], o_->alpha_) -
           Power(total_, o_->alpha_);
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    total_ += o_->column_means_[a];
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<ConcaveRatingsState>(*this);
  }

 private:
  const ConcaveRatingsOracle* o_;
  std::vector<char> in_set_;
  double total_ = 0.0;
};

ConcaveRatingsOracle::ConcaveRatingsOracle(const Matrix& ratings, double alpha)
    : alpha_(alpha) {
  if (ratings.empty()) {
    throw InvalidArgument("ConcaveRatingsOracle: empty ratings matrix");
  }
  CheckNonnegative(ratings, "ConcaveRatingsOracle");
  CheckAlpha(alpha, "ConcaveRatingsOracle");
  column_means_.assign(ratings.cols(), 0.0);
  for (int64_t j = 0; j < ratings.cols(); ++j) {
    for (int64_t i = 0; i < ratings.rows(); ++i) {
      column_means_[j] += ratings(i, j);
    }
    column_means_[j] /= static_cast<double>(ratings.rows());
  }
}

std::unique_ptr<OracleState> ConcaveRatingsOracle::NewState() const {
  return std::make_unique<ConcaveRatingsState>(*this);
}

// ---------------------------------------------------------------------------
// Revenue

class RevenueState final : public OracleState {
 public:
  explicit RevenueState(const RevenueOracle& o)
      : o_(&o), in_set_(o.n_, 0), sums_(o.rows_, 0.0) {}

  double Value() const override {
    double v = 0.0;
    for (double s : sums_) v += Power(s, o_->alpha_);
    return v;
  }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    const double* col = o_->by_element_.data() + a * o_->rows_;
    double gain = 0.0;
    for (int64_t i = 0; i < o_->rows_; ++i) {
      if (col[i] > 0.0) {
        gain += Power(sums_[i] + col[i], o_->alpha_) -
                Power(sums_[i], o_->alpha_);
      }
    }
    return gain;
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    const double* col = o_->by_element_.data() + a * o_->rows_;
    for (int64_t i = 0; i < o_->rows_; ++i) sums_[i] += col[i];
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<RevenueState>(*this);
  }

 private:
  const RevenueOracle* o_;
  std::vector<char> in_set_;
  std::vector<double> sums_;
};

RevenueOracle::RevenueOracle(const Matrix& weights, double alpha)
    : alpha_(alpha) {
  if (weights.empty()) throw InvalidArgument("RevenueOracle: empty matrix");
  CheckNonnegative(weights, "RevenueOracle");
  CheckAlpha(alpha, "RevenueOracle");
  n_ = static_cast<ElementId>(weights.cols());
  rows_ = weights.rows();
  by_element_.resize(n_ * rows_);
  for (int64_t i = 0; i < rows_; ++i) {
    for (ElementId j = 0; j < n_; ++j) {
      by_element_[j * rows_ + i] = weights(i, j);
    }
  }
}

std::unique_ptr<OracleState> RevenueOracle::NewState() const {
  return std::make_unique<RevenueState>(*this);
}

// ---------------------------------------------------------------------------
// Entropy
//
// The state keeps the partition of rows induced by the selected columns.
// Group ids are assigned in order of first occurrence over rows, so they
// depend only on the partition and the entropy sum runs in a canonical
// order.

class EntropyState final : public OracleState {
 public:
  explicit EntropyState(const EntropyOracle& o)
      : o_(&o), in_set_(o.n(), 0), group_(o.m_, 0) {
    if (o.has_label_) {
      Refine(o.label_codes_, *std::max_element(o.label_codes_.begin(),
                                               o.label_codes_.end()) +
                                 1);
    } else {
      counts_.assign(1, o.m_);
    }
    value_ = EntropyOf(counts_);
  }

  double Value() const override { return value_; }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    std::vector<int64_t> counts;
    std::vector<int32_t> scratch;
    Split(o_->codes_[a], o_->levels_[a], &counts, &scratch);
    return EntropyOf(counts) - value_;
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    Refine(o_->codes_[a], o_->levels_[a]);
    value_ = EntropyOf(counts_);
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<EntropyState>(*this);
  }

 private:
  double EntropyOf(const std::vector<int64_t>& counts) const {
    const double m = static_cast<double>(o_->m_);
    double acc = 0.0;
    for (int64_t c : counts) {
      if (c > 0) acc += static_cast<double>(c) * std::log(static_cast<double>(c));
    }
    const double h = std::log(m) - acc / m;
    return h < 0.0 ? 0.0 : h;
  }

  // Computes the refined partition by (group, code). `new_group` receives the
  // canonical group of each row, `counts` the group sizes.
  void Split(const std::vector<int32_t>& codes, int32_t levels,
             std::vector<int64_t>* counts,
             std::vector<int32_t>* new_group) const {
    const int64_t groups = static_cast<int64_t>(counts_.size());
    new_group->resize(o_->m_);
    counts->clear();
    if (groups * levels <= (int64_t{1} << 22)) {
      std::vector<int32_t> id(groups * levels, -1);
      for (int64_t r = 0; r < o_->m_; ++r) {
        int32_t& slot = id[group_[r] * levels + codes[r]];
        if (slot < 0) {
          slot = static_cast<int32_t>(counts->size());
          counts->push_back(0);
        }
        ++(*counts)[slot];
        (*new_group)[r] = slot;
      }
    } else {
      std::unordered_map<int64_t, int32_t> id;
      for (int64_t r = 0; r < o_->m_; ++r) {
        auto [it, fresh] = id.try_emplace(
            int64_t{group_[r]} * levels + codes[r],
            static_cast<int32_t>(counts->size()));
        if (fresh) counts->push_back(0);
        ++(*counts)[it->second];
        (*new_group)[r] = it->second;
      }
    }
  }

  void Refine(const std::vector<int32_t>& codes, int32_t levels) {
    if (counts_.empty()) counts_.assign(1, o_->m_);
    std::vector<int64_t> counts;
    std::vector<int32_t> groups;
    Split(codes, levels, &counts, &groups);
    counts_ = std::move(counts);
    group_ = std::move(groups);
  }

  const EntropyOracle* o_;
  std::vector<char> in_set_;
  std::vector<int32_t> group_;
  std::vector<int64_t> counts_;
  double value_ = 0.0;
};

namespace {

// Maps each distinct value of a column to a dense code in order of value.
std::vector<int32_t> Encode(const std::vector<double>& column,
                            int32_t* levels) {
  std::map<double, int32_t> codes;
  for (double x : column) codes.emplace(x, 0);
  int32_t next = 0;
  for (auto& [value, code] : codes) code = next++;
  *levels = next;
  std::vector<int32_t> out(column.size());
  for (size_t i = 0; i < column.size(); ++i) out[i] = codes.at(column[i]);
  return out;
}

}  // namespace

EntropyOracle::EntropyOracle(const Matrix& samples,
                             std::optional<std::vector<double>> label)
    : m_(samples.rows()), has_label_(label.has_value()) {
  if (samples.rows() == 0) {
    throw InvalidArgument("EntropyOracle: no observations");
  }
  for (double x : samples.data()) {
    if (!std::isfinite(x)) {
      throw InvalidArgument("EntropyOracle: non-finite observation");
    }
  }
  codes_.resize(samples.cols());
  levels_.resize(samples.cols());
  for (int64_t j = 0; j < samples.cols(); ++j) {
    std::vector<double> column(m_);
    for (int64_t i = 0; i < m_; ++i) column[i] = samples(i, j);
    codes_[j] = Encode(column, &levels_[j]);
  }
  if (has_label_) {
    if (static_cast<int64_t>(label->size()) != m_) {
      throw InvalidArgument("EntropyOracle: label length mismatch");
    }
    int32_t levels = 0;
    label_codes_ = Encode(*label, &levels);
  }
}

std::unique_ptr<OracleState> EntropyOracle::NewState() const {
  return std::make_unique<EntropyState>(*this);
}

// ---------------------------------------------------------------------------
// Additive

namespace {

class AdditiveState final : public OracleState {
 public:
  explicit AdditiveState(const std::vector<double>& values)
      : values_(&values), in_set_(values.size(), 0) {}

  double Value() const override { return value_; }
  double Gain(ElementId a) const override {
    return in_set_[a] ? 0.0 : (*values_)[a];
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    value_ += (*values_)[a];
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<AdditiveState>(*this);
  }

 private:
  const std::vector<double>* values_;
  std::vector<char> in_set_;
  double value_ = 0.0;
};

}  // namespace

AdditiveOracle::AdditiveOracle(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("AdditiveOracle: no elements");
  for (double v : values_) {
    if (!(v >= 0.0)) throw InvalidArgument("AdditiveOracle: negative value");
  }
}

std::unique_ptr<OracleState> AdditiveOracle::NewState() const {
  return std::make_unique<AdditiveState>(values_);
}

// ---------------------------------------------------------------------------
// Adversarial

namespace {

class AdversarialState final : public OracleState {
 public:
  explicit AdversarialState(const AdversarialOracle& o)
      : o_(&o), in_set_(o.n(), 0) {}

  double Value() const override { return o_->ValueOfCounts(x_, y_); }
  double Gain(ElementId a) const override {
    if (in_set_[a]) return 0.0;
    return a < o_->block_size() ? o_->ValueOfCounts(x_ + 1, y_) - Value()
                                : o_->ValueOfCounts(x_, y_ + 1) - Value();
  }
  void Add(ElementId a) override {
    if (in_set_[a]) return;
    in_set_[a] = 1;
    (a < o_->block_size() ? x_ : y_) += 1;
  }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<AdversarialState>(*this);
  }

 private:
  const AdversarialOracle* o_;
  std::vector<char> in_set_;
  int64_t x_ = 0;
  int64_t y_ = 0;
};

}  // namespace

AdversarialOracle::AdversarialOracle(ElementId block_size, double c)
    : block_size_(block_size), c_(c) {
  if (block_size < 1) {
    throw InvalidArgument("AdversarialOracle: block size must be >= 1");
  }
  if (!(c >= 4.0)) {
    throw InvalidArgument(
        "AdversarialOracle: c must be >= 4 (for c < 4 the marginal 2 of a G "
        "element after B exceeds its singleton value c/2)");
  }
}

double AdversarialOracle::ValueOfCounts(int64_t x, int64_t y) const {
  if (x == 0) {
    return y == 0 ? 0.0 : c_ / 2.0 + 2.0 * static_cast<double>(y - 1);
  }
  return c_ + static_cast<double>(x - 1) + 2.0 * static_cast<double>(y);
}

std::unique_ptr<OracleState> AdversarialOracle::NewState() const {
  return std::make_unique<AdversarialState>(*this);
}

std::shared_ptr<const AdversarialOracle> AdversarialInstance(ElementId n,
                                                             double c,
                                                             int k) {
  if (k < 1 || n < k) {
    throw InvalidArgument("AdversarialInstance: need 1 <= k <= n");
  }
  return std::make_shared<const AdversarialOracle>(n, c);
}

}  // namespace subcert
