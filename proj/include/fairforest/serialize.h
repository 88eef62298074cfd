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

// Portable forest format (version 1): a single JSON document with a fixed
// field order, so re-serializing a parsed document reproduces its bytes.
//
//   {"version":1, "n_features":int, "feature_names":[...],
//    "sensitive_feature":str,
//    "trees":[{"id":int, "flipped":bool, "root":int, "nodes":[
//       {"id":int, "kind":"split", "feature":int, "threshold":float,
//        "left":int, "right":int}
//     | {"id":int, "kind":"leaf", "pred":0|1, "flipped":bool,
//        "counts":{"y1":int, "y0":int, "s1":int, "s0":int}}]}],
//    "metadata":{...}}

#ifndef FAIRFOREST_SERIALIZE_H_
#define FAIRFOREST_SERIALIZE_H_

#include <string>
#include <string_view>

#include "fairforest/forest.h"
#include "json.hpp"

namespace fairforest {

inline constexpr int kFormatVersion = 1;

nlohmann::ordered_json forest_to_json(const Forest& forest);
// Throws ParseError (naming the tree and node) on schema violations.
Forest forest_from_json(const nlohmann::ordered_json& doc);

std::string serialize(const Forest& forest);
Forest deserialize(std::string_view text);

void save_forest(const Forest& forest, const std::string& path);
Forest load_forest(const std::string& path);

}  // namespace fairforest

#endif  // FAIRFOREST_SERIALIZE_H_
