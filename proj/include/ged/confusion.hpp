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

#ifndef GED_CONFUSION_HPP
#define GED_CONFUSION_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ged/unicode.hpp"

namespace ged {

/// A dictionary word with an optional observation count (default 1).
struct DictEntry {
  std::string word;
  uint64_t frequency = 1;
};

/// Restricted Damerau-Levenshtein (optimal string alignment) distance
/// over codepoints.
size_t damerau_levenshtein(const std::vector<uni::Codepoint>& a,
                           const std::vector<uni::Codepoint>& b);
size_t damerau_levenshtein(const std::string& a, const std::string& b);

/// Edit-distance neighbor index over a word list. Candidate generation
/// uses the deletion-neighborhood trick (every word is indexed under all
/// of its <= max_distance-deletion variants), candidates are then verified
/// with the exact distance, so lookups match a brute-force scan.
class ConfusionIndex {
 public:
  /// max_distance must be 1 or 2; the dictionary must be non-empty.
  /// Duplicate words have their frequencies summed.
  ConfusionIndex(std::vector<DictEntry> dictionary, size_t max_distance);

  /// Dictionary words within max_distance of `word`, excluding `word`
  /// itself, ranked by (distance asc, frequency desc, lexicographic).
  std::vector<std::string> lookup(const std::string& word) const;

  /// One dictionary word sampled with probability proportional to frequency.
  /// `r` is a uniform draw in [0, total_frequency).
  const std::string& sample_word(uint64_t r) const;

  uint64_t total_frequency() const { return total_frequency_; }
  size_t max_distance() const { return max_distance_; }
  size_t size() const { return words_.size(); }

  /// Codepoints occurring in the dictionary, with total frequencies.
  const std::vector<std::pair<uni::Codepoint, uint64_t>>& alphabet() const {
    return alphabet_;
  }

  /// Reads `word` or `word<TAB>frequency` lines (UTF-8, one per line).
  static ConfusionIndex from_file(const std::string& path, size_t max_distance);

 private:
  struct Word {
    std::string text;
    std::vector<uni::Codepoint> cps;
    uint64_t frequency;
    uint64_t cumulative;  // prefix sum for frequency-weighted sampling
  };

  std::vector<Word> words_;
  size_t max_distance_;
  uint64_t total_frequency_ = 0;
  std::unordered_map<std::string, std::vector<uint32_t>> delete_variants_;
  std::vector<std::pair<uni::Codepoint, uint64_t>> alphabet_;
};

std::vector<DictEntry> read_dictionary(const std::string& path);

}  // namespace ged

#endif  // GED_CONFUSION_HPP
