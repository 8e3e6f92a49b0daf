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

#ifndef GED_SAMPLE_HPP
#define GED_SAMPLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ged/tokenize.hpp"
#include "ged/types.hpp"

namespace ged {

struct SampleOptions {
  size_t n = 0;            // target sample size, >= 1
  uint64_t seed = 0;
  size_t min_tokens = 3;   // length bounds applied before sampling
  size_t max_tokens = 128;
  TokenizerScheme tokenizer{};
  // Optional error-free filter: a sentence is dropped when any of its
  // tokens has P(i) >= filter_threshold. The prediction file is aligned
  // line-by-line with the unfiltered corpus.
  const PredictionFile* filter_predictions = nullptr;
  double filter_threshold = 0.5;
};

struct SampleResult {
  std::vector<std::string> sentences;  // emitted in corpus order
  uint64_t dropped_length = 0;
  uint64_t dropped_duplicate = 0;
  uint64_t dropped_predicted_error = 0;
  bool underfull = false;  // fewer survivors than requested
};

/// Deterministic reservoir sample of n sentences after filtering.
SampleResult sample_clean(const std::vector<std::string>& corpus,
                          const SampleOptions& options);

}  // namespace ged

#endif  // GED_SAMPLE_HPP
