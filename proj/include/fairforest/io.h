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

#ifndef FAIRFOREST_IO_H_
#define FAIRFOREST_IO_H_

#include <string>

#include "json.hpp"

namespace fairforest {

// Throws InputError naming the path when the file cannot be read.
std::string read_file(const std::string& path);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

nlohmann::ordered_json read_json_file(const std::string& path);

// Number of worker threads: FAIRFOREST_THREADS when set and positive,
// otherwise the hardware concurrency.
int configured_threads();

}  // namespace fairforest

#endif  // FAIRFOREST_IO_H_
