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

// Data-parallel inner loops of forest evaluation.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 implementation. The variant is picked once at startup from CPU
// support; FAIRFOREST_SIMD=scalar|avx2 overrides the choice. All variants
// produce bit-identical results (integer arithmetic only).

#ifndef FAIRFOREST_KERNELS_H_
#define FAIRFOREST_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

namespace fairforest::kernels {

// Number of readable bytes required past the largest index of a gather table.
inline constexpr std::size_t kGatherPadding = 4;

// Largest vote count the 16-bit majority kernel handles.
inline constexpr std::size_t kMaxTrees = 32767;

struct GroupTally {
  std::int64_t n = 0;
  std::int64_t n_s1 = 0;
  std::int64_t positive_s1 = 0;  // pred = 1 and s = 1
  std::int64_t positive = 0;     // pred = 1
  std::int64_t correct = 0;      // pred = y

  std::int64_t n_s0() const { return n - n_s1; }
  std::int64_t positive_s0() const { return positive - positive_s1; }
  bool operator==(const GroupTally&) const = default;
};

struct KernelSet {
  const char* name;
  // votes[i] += preds[i]
  void (*accumulate_votes)(const std::uint8_t* preds, std::uint16_t* votes,
                           std::size_t n);
  // out[i] = 2 * votes[i] > n_trees
  void (*majority)(const std::uint16_t* votes, std::uint16_t n_trees,
                   std::uint8_t* out, std::size_t n);
  // out[i] = table[index[i]]; table must be padded by kGatherPadding bytes.
  void (*gather)(const std::int32_t* index, const std::uint8_t* table,
                 std::uint8_t* out, std::size_t n);
  GroupTally (*tally)(const std::uint8_t* pred, const std::uint8_t* y,
                      const std::uint8_t* s, std::size_t n);
};

const KernelSet& scalar_kernels();
// Null when not compiled in or not supported by this CPU.
const KernelSet* avx2_kernels();
const KernelSet& active_kernels();

inline void accumulate_votes(std::span<const std::uint8_t> preds,
                             std::span<std::uint16_t> votes) {
  active_kernels().accumulate_votes(preds.data(), votes.data(), preds.size());
}

inline void majority(std::span<const std::uint16_t> votes,
                     std::uint16_t n_trees, std::span<std::uint8_t> out) {
  active_kernels().majority(votes.data(), n_trees, out.data(), votes.size());
}

inline GroupTally tally(std::span<const std::uint8_t> pred,
                        std::span<const std::uint8_t> y,
                        std::span<const std::uint8_t> s) {
  return active_kernels().tally(pred.data(), y.data(), s.data(), pred.size());
}

}  // namespace fairforest::kernels

#endif  // FAIRFOREST_KERNELS_H_
