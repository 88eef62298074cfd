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

// Decision tree ensembles with binary leaves.
//
// A Tree stores its nodes in a flat vector indexed by node id. Split nodes
// send an instance left iff instance[feature] <= threshold. Leaves carry the
// current (possibly flipped) prediction, an audit flag recording whether the
// prediction was flipped after training, and routing statistics computed
// against a repair dataset.

#ifndef FAIRFOREST_FOREST_H_
#define FAIRFOREST_FOREST_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace fairforest {

class Dataset;

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// Counts of repair instances routed to one leaf.
struct LeafStats {
  std::int64_t y1 = 0;
  std::int64_t y0 = 0;
  std::int64_t s1 = 0;
  std::int64_t s0 = 0;

  std::int64_t total() const { return y1 + y0; }
  bool operator==(const LeafStats&) const = default;
};

enum class NodeKind : std::uint8_t { kSplit, kLeaf };

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::kLeaf;
  // Split fields.
  std::int32_t feature = -1;
  double threshold = 0.0;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  // Leaf fields.
  std::uint8_t prediction = 0;
  bool flipped = false;
  LeafStats counts;

  bool is_leaf() const { return kind == NodeKind::kLeaf; }

  static Node leaf(NodeId id, std::uint8_t prediction);
  static Node split(NodeId id, std::int32_t feature, double threshold,
                    NodeId left, NodeId right);

  bool operator==(const Node&) const = default;
};

struct Tree {
  std::int32_t id = 0;
  std::vector<Node> nodes;
  NodeId root = 0;
  bool flipped = false;

  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  std::vector<NodeId> leaf_ids() const;
  int depth() const;

  bool operator==(const Tree&) const = default;
};

struct Forest {
  std::vector<Tree> trees;
  int n_features = 0;
  std::vector<std::string> feature_names;
  std::string sensitive_feature;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  std::size_t total_leaves() const;

  bool operator==(const Forest&) const = default;
};

// Checks the topology of a tree: node ids match their slot, children exist,
// every non-root node has exactly one parent and all nodes are reachable.
// Throws StructuralError naming the offending node.
void validate_tree(const Tree& tree, int n_features);
void validate_forest(const Forest& forest);

// Returns the leaf reached by descending from the root.
NodeId route(const Tree& tree, std::span<const double> instance);

std::uint8_t predict_tree(const Tree& tree, std::span<const double> instance);

// Hard majority vote; an exact tie predicts 0.
std::uint8_t predict_forest(const Forest& forest,
                            std::span<const double> instance);

// Inverts the leaf prediction and toggles its flipped flag. Applying it twice
// restores the tree.
void toggle_leaf(Tree& tree, NodeId leaf);

// Recomputes every leaf's statistics from the instances of `repair`.
void annotate_leaf_stats(Forest& forest, const Dataset& repair);
void annotate_leaf_stats(Tree& tree, const Dataset& repair);

}  // namespace fairforest

#endif  // FAIRFOREST_FOREST_H_
