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

// Post-hoc fairness repair of a forest by flipping leaf predictions.
//
// Leaves are scored by how much flipping them lowers their tree's
// discrimination on the repair set per unit of accuracy lost. Two greedy
// drivers use the scores, both repeatedly attacking the unflipped tree with
// the largest discrimination:
//
//   tree-based (TF): flip every candidate leaf of that tree, retire the tree.
//   leaf-based (LF): flip only its best leaf; retire the tree once it has no
//                    candidates left.
//
// Both stop as soon as forest discrimination on the repair set is <= epsilon,
// the accuracy drop relative to the starting forest reaches alpha, or every
// tree is retired. Forest metrics are re-evaluated exactly after each step.

#ifndef FAIRFOREST_RELABEL_H_
#define FAIRFOREST_RELABEL_H_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fairforest/dataset.h"
#include "fairforest/forest.h"
#include "json.hpp"

namespace fairforest {

enum class Strategy { kTreeBased, kLeafBased };

// kExact scores a flip by its actual effect given the leaf's current
// prediction. kLiteral reproduces the published pseudocode verbatim
// (delta = disc / accu with accu <= 0, kept when delta >= 0); it selects
// discrimination-increasing flips and exists only for auditing.
enum class ScoreMode { kExact, kLiteral };

enum class StopReason { kDiscMet, kAccuracyBudget, kTreesExhausted };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);
std::string score_mode_name(ScoreMode m);
std::string stop_reason_name(StopReason r);

// Score of a flip that lowers discrimination without costing accuracy (a
// leaf whose prediction disagrees with the repair-set majority).
inline constexpr double kZeroCostScore = std::numeric_limits<double>::max();

struct CandidateLeaf {
  std::int32_t tree_id = 0;
  NodeId leaf_id = 0;
  // Change of tree accuracy on the repair set caused by the flip.
  double delta_accu = 0.0;
  // Drop of tree discrimination on the repair set caused by the flip.
  double delta_disc = 0.0;
  double score = 0.0;
};

struct RelabelConfig {
  double epsilon = 0.05;
  double alpha = 1.0;
  Strategy strategy = Strategy::kLeafBased;
  ScoreMode score_mode = ScoreMode::kExact;

  void validate() const;
};

struct FlipRecord {
  NodeId leaf_id = 0;
  std::uint8_t new_prediction = 0;
  double delta_accu = 0.0;
  double delta_disc = 0.0;
  double score = 0.0;
};

struct IterationRecord {
  int iteration = 0;
  std::int32_t tree_id = 0;
  std::vector<FlipRecord> flips;
  bool tree_retired = false;
  double tree_disc_before = 0.0;
  double tree_disc_after = 0.0;
  double forest_disc_before = 0.0;
  double forest_disc_after = 0.0;
  double forest_accuracy_before = 0.0;
  double forest_accuracy_after = 0.0;
  // Accuracy drop w.r.t. the starting forest, before and after this step.
  double delta_accuracy_before = 0.0;
  double delta_accuracy_after = 0.0;
};

struct RelabelReport {
  RelabelConfig config;
  double baseline_accuracy = 0.0;
  double baseline_discrimination = 0.0;
  double final_accuracy = 0.0;
  double final_discrimination = 0.0;
  double delta_accuracy = 0.0;
  StopReason stop_reason = StopReason::kDiscMet;
  // Repair-set discrimination ended below -epsilon (reverse discrimination
  // is never acted upon).
  bool negative_discrimination = false;
  std::size_t leaves_flipped = 0;
  std::size_t trees_retired = 0;
  std::vector<IterationRecord> iterations;
};

struct RelabelResult {
  Forest forest;
  RelabelReport report;
};

// Candidate flips of a tree whose leaf statistics were annotated against
// `repair`, best first (score descending, then tree id, then leaf id).
// Leaves already flipped, leaves with tied label counts (including empty
// leaves) and flips that do not lower discrimination are left out.
// Throws UsageError when the statistics do not cover `repair` and
// UndefinedMetricError when a group of `repair` is empty.
std::vector<CandidateLeaf> score_leaves(const Tree& tree, const Dataset& repair,
                                        ScoreMode mode = ScoreMode::kExact);

RelabelResult eifffel_tf(Forest forest, const Dataset& repair, RelabelConfig config);
RelabelResult eifffel_lf(Forest forest, const Dataset& repair, RelabelConfig config);
// Dispatches on config.strategy.
RelabelResult relabel(Forest forest, const Dataset& repair, const RelabelConfig& config);

// Re-applies the flips recorded in a report to the forest it started from.
Forest replay(Forest forest, const RelabelReport& report);

nlohmann::ordered_json to_json(const IterationRecord& record);
nlohmann::ordered_json summary_json(const RelabelReport& report);
// One JSON object per iteration followed by the summary object.
std::string to_jsonl(const RelabelReport& report);

}  // namespace fairforest

#endif  // FAIRFOREST_RELABEL_H_
