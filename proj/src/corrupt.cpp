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

#include "ged/corrupt.hpp"

#include <algorithm>
#include <stdexcept>

#include "ged/parallel.hpp"
#include "ged/rng.hpp"

namespace ged {

void CorruptionConfig::validate() const {
  if (p_word < 0.0 || p_word > 1.0 || p_char < 0.0 || p_char > 1.0) {
    throw std::invalid_argument("noise probabilities must lie in [0,1]");
  }
  for (const OpWeights* w : {&word_op_weights, &char_op_weights}) {
    for (double v : w->weights) {
      if (v < 0.0) throw std::invalid_argument("operation weights must be >= 0");
    }
    if (w->sum() <= 0.0) {
      throw std::invalid_argument("operation weights must sum to a positive value");
    }
  }
  if (max_distance != 1 && max_distance != 2) {
    throw std::invalid_argument("max_distance must be 1 or 2");
  }
}

namespace {

std::string join_tokens(const TokenSequence& seq) {
  std::string out;
  for (size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += seq.tokens[i];
  }
  return out;
}

uni::Codepoint sample_alphabet_char(const ConfusionIndex& index, Rng& rng) {
  const auto& alphabet = index.alphabet();
  uint64_t total = 0;
  for (const auto& [cp, freq] : alphabet) total += freq;
  uint64_t r = rng.next_below(total);
  for (const auto& [cp, freq] : alphabet) {
    if (r < freq) return cp;
    r -= freq;
  }
  return alphabet.back().first;
}

// One character operation inside the token. Operations that would empty
// the token or have nothing to act on are skipped.
std::string char_noise(const std::string& token, const CorruptionConfig& config,
                       const ConfusionIndex& index, Rng& rng) {
  auto cps = uni::decode(token);
  const auto op = static_cast<NoiseOp>(
      rng.weighted_choice(config.char_op_weights.weights));
  switch (op) {
    case NoiseOp::Replace: {
      const size_t pos = rng.next_below(cps.size());
      cps[pos] = sample_alphabet_char(index, rng);
      break;
    }
    case NoiseOp::Delete:
      if (cps.size() > 1) cps.erase(cps.begin() + rng.next_below(cps.size()));
      break;
    case NoiseOp::Insert: {
      const size_t pos = rng.next_below(cps.size() + 1);
      cps.insert(cps.begin() + pos, sample_alphabet_char(index, rng));
      break;
    }
    case NoiseOp::Swap:
      if (cps.size() > 1) {
        const size_t pos = rng.next_below(cps.size() - 1);
        std::swap(cps[pos], cps[pos + 1]);
      }
      break;
  }
  return uni::encode(cps);
}

}  // namespace

TokenSequence corrupt_sentence(const TokenSequence& tokens,
                               const CorruptionConfig& config,
                               const ConfusionIndex& index,
                               uint64_t sentence_seed) {
  Rng rng(sentence_seed);
  const auto& in = tokens.tokens;
  const size_t n = in.size();

  // Which positions receive a word operation.
  std::vector<bool> word_hit(n, false);
  if (config.per_sentence_rate) {
    const double expected = config.p_word * static_cast<double>(n);
    size_t k = static_cast<size_t>(expected);
    if (rng.next_double() < expected - static_cast<double>(k)) ++k;
    k = std::min(k, n);
    std::vector<size_t> positions(n);
    for (size_t i = 0; i < n; ++i) positions[i] = i;
    rng.shuffle(positions);
    for (size_t i = 0; i < k; ++i) word_hit[positions[i]] = true;
  } else {
    for (size_t i = 0; i < n; ++i) word_hit[i] = rng.bernoulli(config.p_word);
  }

  std::vector<std::string> out;
  out.reserve(n + 2);
  std::vector<bool> consumed(n, false);  // right neighbors taken by a swap
  for (size_t i = 0; i < n; ++i) {
    if (consumed[i]) continue;
    if (!word_hit[i]) {
      out.push_back(in[i]);
      continue;
    }
    const auto op = static_cast<NoiseOp>(
        rng.weighted_choice(config.word_op_weights.weights));
    switch (op) {
      case NoiseOp::Replace: {
        if (uni::all_punct(in[i])) {
          out.push_back(in[i]);  // punctuation has no confusion set
          break;
        }
        const auto candidates = index.lookup(in[i]);
        if (candidates.empty()) {
          out.push_back(char_noise(in[i], config, index, rng));
        } else {
          out.push_back(candidates[rng.next_below(candidates.size())]);
        }
        break;
      }
      case NoiseOp::Delete:
        break;
      case NoiseOp::Insert:
        out.push_back(in[i]);
        out.push_back(index.sample_word(rng.next_below(index.total_frequency())));
        break;
      case NoiseOp::Swap:
        if (i + 1 < n) {
          out.push_back(in[i + 1]);
          out.push_back(in[i]);
          consumed[i + 1] = true;
        } else {
          out.push_back(in[i]);  // no right neighbor
        }
        break;
    }
  }

  // Independent character noise pass.
  if (config.p_char > 0.0) {
    for (std::string& tok : out) {
      if (rng.bernoulli(config.p_char)) {
        tok = char_noise(tok, config, index, rng);
      }
    }
  }

  TokenSequence result;
  result.tokens = std::move(out);
  result.language = tokens.language;
  return result;
}

std::vector<ParallelPair> corrupt_corpus(const std::vector<TokenSequence>& sentences,
                                         const CorruptionConfig& config,
                                         const ConfusionIndex& index,
                                         unsigned threads) {
  config.validate();
  std::vector<ParallelPair> out(sentences.size());
  parallel_for(sentences.size(), threads, [&](size_t i) {
    ParallelPair& pair = out[i];
    pair.seed = derive_seed(config.seed, i);
    pair.original = sentences[i];
    pair.corrupted = corrupt_sentence(sentences[i], config, index, pair.seed);
    pair.provenance = Provenance::SyntheticRules;
    pair.degenerate = pair.original.tokens.empty() || pair.corrupted.tokens.empty();
    // Space-joined so downstream pretokenized readers recover the tokens.
    pair.original.source_text = join_tokens(pair.original);
    pair.corrupted.source_text = join_tokens(pair.corrupted);
  });
  return out;
}

}  // namespace ged
