// Copyright 2026 The FairForest Authors.
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

// Accuracy and group discrimination of binary predictors.
//
// Discrimination is the favorable-rate gap between the privileged and the
// unprivileged group:
//
//   disc = |{S=1, g(x)=1}| / |{S=1}|  -  |{S=0, g(x)=1}| / |{S=0}|
//
// It is undefined (UndefinedMetricError) when either group is empty.

#ifndef FAIRFOREST_METRICS_H_
#define FAIRFOREST_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fairforest/dataset.h"
#include "fairforest/forest.h"
#include "fairforest/kernels.h"
#include "json.hpp"

namespace fairforest {

struct MetricsReport {
  double accuracy = 0.0;
  double discrimination = 0.0;
  double rate_s1 = 0.0;
  double rate_s0 = 0.0;
  std::int64_t n = 0;
  std::int64_t n_s1 = 0;
  std::int64_t n_s0 = 0;
  std::int64_t positive_s1 = 0;
  std::int64_t positive_s0 = 0;
  std::int64_t correct = 0;

  bool operator==(const MetricsReport&) const = default;
};

nlohmann::ordered_json to_json(const MetricsReport& report);

// Requires a non-empty dataset with both groups present.
MetricsReport report_from_tally(const kernels::GroupTally& tally);

MetricsReport evaluate_predictions(std::span<const std::uint8_t> predictions,
                                   const Dataset& dataset);
double discrimination_of(std::span<const std::uint8_t> predictions,
                         const Dataset& dataset);
double accuracy_of(std::span<const std::uint8_t> predictions,
                   const Dataset& dataset);

// Any callable mapping a feature row to {0,1}.
template <typename Predictor>
std::vector<std::uint8_t> predict_all(Predictor&& predict, const Dataset& dataset) {
  std::vector<std::uint8_t> out(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(predict(dataset.row(i)));
  }
  return out;
}

template <typename Predictor>
double discrimination(Predictor&& predict, const Dataset& dataset) {
  return discrimination_of(predict_all(predict, dataset), dataset);
}

template <typename Predictor>
double accuracy(Predictor&& predict, const Dataset& dataset) {
  return accuracy_of(predict_all(predict, dataset), dataset);
}

std::vector<std::uint8_t> tree_predictions(const Tree& tree, const Dataset& dataset);
std::vector<std::uint8_t> forest_predictions(const Forest& forest,
                                             const Dataset& dataset);

double tree_discrimination(const Tree& tree, const Dataset& dataset);
double forest_discrimination(const Forest& forest, const Dataset& dataset);
double tree_accuracy(const Tree& tree, const Dataset& dataset);
double forest_accuracy(const Forest& forest, const Dataset& dataset);
MetricsReport evaluate(const Forest& forest, const Dataset& dataset);

// Routing of a fixed dataset through every tree of a forest, computed once.
// Leaf flips never change routing, so after flipping leaves of tree t only
// refresh_tree(t) is needed before re-reading predictions and metrics.
class ForestEvaluator {
 public:
  ForestEvaluator(const Forest& forest, const Dataset& dataset);

  // Re-reads the leaf predictions of tree t.
  void refresh_tree(const Tree& tree, std::size_t t);

  std::span<const std::int32_t> leaf_of(std::size_t t) const { return leaf_of_[t]; }
  std::span<const std::uint8_t> tree_predictions(std::size_t t) const {
    return tree_pred_[t];
  }
  // Full majority vote over all trees.
  std::span<const std::uint8_t> forest_predictions();

  MetricsReport tree_report(std::size_t t) const;
  MetricsReport forest_report();

  const Dataset& dataset() const { return *dataset_; }
  std::size_t n_trees() const { return leaf_of_.size(); }

 private:
  const Dataset* dataset_;
  std::vector<std::vector<std::int32_t>> leaf_of_;
  std::vector<std::vector<std::uint8_t>> table_;
  std::vector<std::vector<std::uint8_t>> tree_pred_;
  std::vector<std::uint16_t> votes_;
  std::vector<std::uint8_t> forest_pred_;
};

}  // namespace fairforest

#endif  // FAIRFOREST_METRICS_H_
