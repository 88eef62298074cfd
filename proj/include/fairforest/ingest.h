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

// CSV ingestion: missing-value row removal, one-hot encoding of categorical
// columns, binary encoding of the label and the sensitive attribute, and
// seeded train/test splitting.

#ifndef FAIRFOREST_INGEST_H_
#define FAIRFOREST_INGEST_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairforest/dataset.h"
#include "json.hpp"

namespace fairforest {

enum class ColumnKind { kNumeric, kCategorical, kLabel, kSensitive };

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kNumeric;
  bool operator==(const ColumnSpec&) const = default;
};

// Describes how raw CSV columns become features, y and S. Header columns not
// listed here are ignored.
struct FeatureSchema {
  std::string name;
  std::vector<ColumnSpec> columns;

  // y = 1 iff the raw label equals favorable_label_value. When label_values
  // is non-empty, any other raw value is rejected.
  std::string favorable_label_value;
  std::vector<std::string> label_values;

  // S encoding, in order of precedence:
  //   sensitive_threshold set:          S = 1 iff numeric value >= threshold
  //   sensitive_unprivileged_value set: S = 0 iff raw == that value
  //   otherwise:                        S = 1 iff raw == privileged value
  std::string sensitive_privileged_value;
  std::optional<std::string> sensitive_unprivileged_value;
  std::optional<double> sensitive_threshold;
  std::vector<std::string> sensitive_values;

  std::vector<std::string> missing_tokens;
  char delimiter = ',';

  const ColumnSpec& label_column() const;
  const ColumnSpec& sensitive_column() const;
  // Throws ConfigError unless there is exactly one label and one sensitive
  // column and all names are distinct.
  void validate() const;

  bool operator==(const FeatureSchema&) const = default;
};

nlohmann::ordered_json schema_to_json(const FeatureSchema& schema);
FeatureSchema schema_from_json(const nlohmann::ordered_json& doc);

// Schemas for the adult, compas and bank datasets. Throws ConfigError for
// any other name.
FeatureSchema builtin_schema(std::string_view name);
// A builtin name or a path to a schema JSON file.
FeatureSchema resolve_schema(const std::string& name_or_path);

// Category lists per categorical column, in encoding order.
using Vocabulary = std::map<std::string, std::vector<std::string>>;

// Recovers the vocabulary from one-hot feature names ("column=value").
Vocabulary vocabulary_from_feature_names(const std::vector<std::string>& names,
                                         const FeatureSchema& schema);

struct LoadedData {
  Dataset dataset;
  Vocabulary vocabulary;
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

// Categories are taken from the file in first-seen order.
LoadedData load_csv(const std::string& path, const FeatureSchema& schema);
// Categories are fixed; a category missing from `vocabulary` is an error.
LoadedData load_csv(const std::string& path, const FeatureSchema& schema,
                    const Vocabulary& vocabulary);
// Same as load_csv on in-memory CSV text. `source` names it in errors.
LoadedData parse_csv(std::string_view text, const FeatureSchema& schema,
                     const Vocabulary* vocabulary = nullptr,
                     const std::string& source = "<memory>");

// Size of the test part: the product rounded half away from zero.
std::size_t test_size(std::size_t n, double test_fraction);

// Seeded shuffle, then the first test_size(n) shuffled rows form the test set.
// Both parts keep their shuffled order.
std::pair<Dataset, Dataset> split(const Dataset& dataset, double test_fraction,
                                  std::uint64_t seed);

}  // namespace fairforest

#endif  // FAIRFOREST_INGEST_H_
