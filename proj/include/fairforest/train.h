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

// CART-style random forest training with entropy gain.
//
// Besides the usual class gain, every candidate split is also scored by its
// information gain w.r.t. the sensitive attribute S, and the two gains are
// combined according to SplitCriterion:
//
//   plain     gc
//   fair_sub  gc - gs
//   fair_div  gc / gs   (gc when gs == 0)
//   fair_add  gc + gs

#ifndef FAIRFOREST_TRAIN_H_
#define FAIRFOREST_TRAIN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairforest/dataset.h"
#include "fairforest/forest.h"
#include "fairforest/random.h"
#include "json.hpp"

namespace fairforest {

enum class SplitCriterion { kPlain, kFairSub, kFairDiv, kFairAdd };

std::string criterion_name(SplitCriterion c);
SplitCriterion criterion_from_name(const std::string& name);

struct TrainConfig {
  int n_trees = 20;
  int max_depth = 8;
  int min_samples_leaf = 1;
  SplitCriterion criterion = SplitCriterion::kPlain;
  // 0 means floor(sqrt(n_features)).
  int features_per_split = 0;
  bool bootstrap = true;
  std::uint64_t seed = 0;

  int resolved_features_per_split(std::size_t n_features) const;
  // Throws ConfigError.
  void validate(std::size_t n_features) const;
};

nlohmann::ordered_json to_json(const TrainConfig& config);
// Missing fields keep their defaults.
TrainConfig train_config_from_json(const nlohmann::ordered_json& doc);

struct SplitCandidate {
  int feature_index = -1;
  double threshold = 0.0;
  double gain_class = 0.0;
  double gain_sensitive = 0.0;
  double combined_gain = 0.0;
};

// Binary Shannon entropy (bits) of a set with `positive` of `total` weight.
double binary_entropy(double positive, double total);

// H(parent) - |L|/|P| H(L) - |R|/|P| H(R) for 0/1 labels.
double info_gain(std::span<const std::uint8_t> parent,
                 std::span<const std::uint8_t> left,
                 std::span<const std::uint8_t> right);

double combined_gain(double gain_class, double gain_sensitive,
                     SplitCriterion criterion);

// Column-major copy of a dataset for split search.
class TrainingData {
 public:
  explicit TrainingData(const Dataset& dataset);

  std::size_t size() const { return y_.size(); }
  std::size_t n_features() const { return n_features_; }
  std::span<const double> column(std::size_t f) const {
    return {columns_.data() + f * size(), size()};
  }
  std::uint8_t y(std::size_t i) const { return y_[i]; }
  std::uint8_t s(std::size_t i) const { return s_[i]; }
  // True when every value of feature f is 0 or 1.
  bool is_binary(std::size_t f) const { return binary_[f]; }

 private:
  std::size_t n_features_;
  std::vector<double> columns_;
  std::vector<std::uint8_t> y_;
  std::vector<std::uint8_t> s_;
  std::vector<bool> binary_;
};

// Multiplicity of each instance in a bootstrap resample of size n.
std::vector<std::uint32_t> bootstrap_weights(std::size_t n, Rng& rng);

// The generator used for tree `index` of a forest trained with `seed`. The
// trainer draws bootstrap weights from it first, then grows the tree.
Rng tree_rng(std::uint64_t seed, std::size_t index);

// Grows one tree on the instances with non-zero weight.
Tree grow_tree(const TrainingData& data, std::span<const std::uint32_t> weights,
               const TrainConfig& config, Rng& rng);

// Trains config.n_trees trees (in parallel when FAIRFOREST_THREADS allows)
// and annotates leaf statistics against the full training set.
Forest train_forest(const Dataset& train, const TrainConfig& config);

}  // namespace fairforest

#endif  // FAIRFOREST_TRAIN_H_
