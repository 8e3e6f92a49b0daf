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

#include "ged/sample.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ged/rng.hpp"

namespace ged {

SampleResult sample_clean(const std::vector<std::string>& corpus,
                          const SampleOptions& options) {
  if (options.n == 0) throw std::invalid_argument("sample size must be >= 1");
  if (options.filter_predictions &&
      options.filter_predictions->sentences.size() != corpus.size()) {
    throw std::invalid_argument(
        "filter prediction file must have one sentence per corpus line (" +
        std::to_string(options.filter_predictions->sentences.size()) + " vs " +
        std::to_string(corpus.size()) + ")");
  }

  SampleResult result;
  std::unordered_set<std::string> seen;
  std::vector<size_t> survivors;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::string& line = corpus[i];
    const size_t tokens = tokenize(line, options.tokenizer).size();
    if (tokens < options.min_tokens || tokens > options.max_tokens) {
      ++result.dropped_length;
      continue;
    }
    if (!seen.insert(line).second) {
      ++result.dropped_duplicate;
      continue;
    }
    if (options.filter_predictions) {
      const auto& probs = options.filter_predictions->sentences[i].probabilities;
      const bool has_error =
          std::any_of(probs.begin(), probs.end(), [&](double p) {
            return p >= options.filter_threshold;
          });
      if (has_error) {
        ++result.dropped_predicted_error;
        continue;
      }
    }
    survivors.push_back(i);
  }

  // Reservoir sampling (algorithm R) over the survivor stream; the output
  // is then restored to corpus order.
  std::vector<size_t> reservoir;
  if (survivors.size() <= options.n) {
    reservoir = survivors;
    result.underfull = survivors.size() < options.n;
  } else {
    Rng rng(options.seed);
    reservoir.assign(survivors.begin(), survivors.begin() + options.n);
    for (size_t i = options.n; i < survivors.size(); ++i) {
      const uint64_t j = rng.next_below(i + 1);
      if (j < options.n) reservoir[j] = survivors[i];
    }
    std::sort(reservoir.begin(), reservoir.end());
  }

  result.sentences.reserve(reservoir.size());
  for (size_t idx : reservoir) result.sentences.push_back(corpus[idx]);
  return result;
}

}  // namespace ged
