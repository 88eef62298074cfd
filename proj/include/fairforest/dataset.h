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

#ifndef FAIRFOREST_DATASET_H_
#define FAIRFOREST_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fairforest {

// Encoded tabular data: a dense row-major feature matrix plus the binary
// label y and the binary sensitive attribute s of every instance.
//
// The sensitive indicator also appears as an ordinary feature column
// (sensitive_column), so trees may split on it.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> feature_names, int sensitive_column);

  void add(std::span<const double> features, std::uint8_t y, std::uint8_t s);
  void reserve(std::size_t n);

  std::size_t size() const { return y_.size(); }
  bool empty() const { return y_.empty(); }
  std::size_t n_features() const { return feature_names_.size(); }

  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * n_features(), n_features()};
  }
  std::uint8_t y(std::size_t i) const { return y_[i]; }
  std::uint8_t s(std::size_t i) const { return s_[i]; }
  std::span<const std::uint8_t> labels() const { return y_; }
  std::span<const std::uint8_t> groups() const { return s_; }

  std::size_t n_s1() const { return n_s1_; }
  std::size_t n_s0() const { return size() - n_s1_; }

  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  // Index of the sensitive indicator among the features, or -1 when the
  // sensitive attribute is not exposed as a feature.
  int sensitive_column() const { return sensitive_column_; }
  const std::string& sensitive_name() const;

  // Rows in the given order, group counts recomputed.
  Dataset subset(std::span<const std::size_t> indices) const;

  // Copy with the group encoding swapped (s -> 1 - s). The sensitive feature
  // column is swapped as well.
  Dataset with_swapped_groups() const;

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<std::string> feature_names_;
  int sensitive_column_ = -1;
  std::vector<double> features_;
  std::vector<std::uint8_t> y_;
  std::vector<std::uint8_t> s_;
  std::size_t n_s1_ = 0;
};

}  // namespace fairforest

#endif  // FAIRFOREST_DATASET_H_
