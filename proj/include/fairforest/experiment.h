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


// Grid runner: one baseline forest per (dataset, base criterion), repaired
// under every (strategy, epsilon, alpha) cell and scored on the test split.
//
// Layout under output_dir:
//   <dataset>.tsv              one row per cell
//   <dataset>_frontier.csv     test accuracy vs discrimination, baselines included
//   <dataset>_errors.txt       only when some cells failed
//   <dataset>/baseline_<criterion>.forest.json (+ .metrics.json)
//   <dataset>/<cell>.forest.json, <cell>.report.jsonl, <cell>.cell.json

#ifndef FAIRFOREST_EXPERIMENT_H_
#define FAIRFOREST_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairforest/relabel.h"
#include "fairforest/train.h"
#include "json.hpp"

namespace fairforest {

struct DatasetSource {
  std::string name;
  std::string data;    // CSV path
  std::string schema;  // builtin name or schema JSON path
};

struct ExperimentSpec {
  std::vector<DatasetSource> datasets;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
  TrainConfig train;
  std::vector<double> epsilons;
  std::vector<double> alphas;
  std::vector<Strategy> strategies;
  std::vector<SplitCriterion> base_criteria{SplitCriterion::kPlain};
  ScoreMode score_mode = ScoreMode::kExact;
  std::string output_dir;

  // Throws ConfigError on empty grids or out-of-range values and
  // InputError when a data file cannot be read.
  void validate() const;
};

ExperimentSpec experiment_spec_from_json(const nlohmann::ordered_json& doc);

struct CellResult {
  std::string dataset;
  Strategy strategy = Strategy::kLeafBased;
  SplitCriterion base_criterion = SplitCriterion::kPlain;
  double epsilon = 0.0;
  double alpha = 0.0;
  bool ok = false;
  std::string error;
  double baseline_accuracy_test = 0.0;
  double baseline_discrimination_test = 0.0;
  double accuracy_test = 0.0;
  double discrimination_test = 0.0;
  std::optional<RelabelReport> report;
};

// Rounds 100 * value half away from zero.
long long to_points(double value);

std::string cell_name(const CellResult& cell);
std::string format_tsv(const std::vector<CellResult>& cells);

// Runs the whole grid. Individual cell failures are recorded, not thrown.
std::vector<CellResult> run_experiment(const ExperimentSpec& spec);

}  // namespace fairforest

#endif  // FAIRFOREST_EXPERIMENT_H_
