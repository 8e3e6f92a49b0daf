// Copyright 2026 The gedkit Authors
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

#ifndef GED_CORRUPT_HPP
#define GED_CORRUPT_HPP

#include <array>
#include <cstdint>

#include "ged/confusion.hpp"
#include "ged/types.hpp"

namespace ged {

/// Weights over the four noising operations, in this order.
enum class NoiseOp : uint8_t { Replace, Delete, Insert, Swap };

struct OpWeights {
  std::array<double, 4> weights{0.7, 0.1, 0.1, 0.1};

  double& operator[](NoiseOp op) { return weights[static_cast<size_t>(op)]; }
  double operator[](NoiseOp op) const { return weights[static_cast<size_t>(op)]; }
  double sum() const { return weights[0] + weights[1] + weights[2] + weights[3]; }
};

struct CorruptionConfig {
  uint64_t seed = 0;
  double p_word = 0.15;
  OpWeights word_op_weights{};                       // replace-heavy default
  double p_char = 0.1;
  OpWeights char_op_weights{{0.25, 0.25, 0.25, 0.25}};
  size_t max_distance = 2;
  // When true, one per-sentence error count is drawn instead of per-token
  // Bernoulli trials (alternative noising variant).
  bool per_sentence_rate = false;

  void validate() const;
};

/// Applies seeded word- and character-level noise to one sentence.
/// Output is fully determined by (config, sentence_seed, index, tokens).
TokenSequence corrupt_sentence(const TokenSequence& tokens,
                               const CorruptionConfig& config,
                               const ConfusionIndex& index,
                               uint64_t sentence_seed);

/// Corrupts a corpus; pair i uses seed derive_seed(config.seed, i) so
/// serial and parallel runs produce identical bytes. Provenance is
/// synthetic-rules; empty corrupted sides come back flagged degenerate.
std::vector<ParallelPair> corrupt_corpus(const std::vector<TokenSequence>& sentences,
                                         const CorruptionConfig& config,
                                         const ConfusionIndex& index,
                                         unsigned threads = 0);

}  // namespace ged

#endif  // GED_CORRUPT_HPP
