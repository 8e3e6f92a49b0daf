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

#include "ged/confusion.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

#include "ged/types.hpp"

namespace ged {

size_t damerau_levenshtein(const std::vector<uni::Codepoint>& a,
                           const std::vector<uni::Codepoint>& b) {
  const size_t m = a.size();
  const size_t n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;
  // Three rolling rows (transposition looks two rows back).
  std::vector<size_t> prev2(n + 1), prev(n + 1), curr(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = j;
  for (size_t i = 1; i <= m; ++i) {
    curr[0] = i;
    for (size_t j = 1; j <= n; ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      size_t best = std::min({sub, prev[j] + 1, curr[j - 1] + 1});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      curr[j] = best;
    }
    std::swap(prev2, prev);
    std::swap(prev, curr);
  }
  return prev[n];
}

size_t damerau_levenshtein(const std::string& a, const std::string& b) {
  return damerau_levenshtein(uni::decode(a), uni::decode(b));
}

namespace {

// All distinct strings reachable from `cps` by deleting up to `depth`
// codepoints, encoded back to UTF-8 (the original string included).
void collect_deletes(const std::vector<uni::Codepoint>& cps, size_t depth,
                     std::vector<std::string>& out) {
  out.push_back(uni::encode(cps));
  if (depth == 0 || cps.empty()) return;
  std::vector<uni::Codepoint> shorter;
  shorter.reserve(cps.size() - 1);
  for (size_t skip = 0; skip < cps.size(); ++skip) {
    shorter.clear();
    for (size_t i = 0; i < cps.size(); ++i) {
      if (i != skip) shorter.push_back(cps[i]);
    }
    collect_deletes(shorter, depth - 1, out);
  }
}

std::vector<std::string> delete_neighborhood(const std::vector<uni::Codepoint>& cps,
                                             size_t depth) {
  std::vector<std::string> out;
  collect_deletes(cps, depth, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ConfusionIndex::ConfusionIndex(std::vector<DictEntry> dictionary,
                               size_t max_distance)
    : max_distance_(max_distance) {
  if (dictionary.empty()) throw std::invalid_argument("empty dictionary");
  if (max_distance != 1 && max_distance != 2) {
    throw std::invalid_argument("max_distance must be 1 or 2");
  }

  // Merge duplicates, keep deterministic (sorted) word order.
  std::map<std::string, uint64_t> merged;
  for (auto& e : dictionary) merged[std::move(e.word)] += e.frequency;

  words_.reserve(merged.size());
  std::map<uni::Codepoint, uint64_t> alphabet;
  for (auto& [text, freq] : merged) {
    Word w;
    w.text = text;
    w.cps = uni::decode(text);
    w.frequency = freq;
    total_frequency_ += freq;
    w.cumulative = total_frequency_;
    for (uni::Codepoint cp : w.cps) alphabet[cp] += freq;
    words_.push_back(std::move(w));
  }
  alphabet_.assign(alphabet.begin(), alphabet.end());

  for (uint32_t id = 0; id < words_.size(); ++id) {
    for (auto& variant : delete_neighborhood(words_[id].cps, max_distance_)) {
      delete_variants_[std::move(variant)].push_back(id);
    }
  }
}

std::vector<std::string> ConfusionIndex::lookup(const std::string& word) const {
  const auto query_cps = uni::decode(word);
  std::vector<uint32_t> candidates;
  for (const auto& variant : delete_neighborhood(query_cps, max_distance_)) {
    auto it = delete_variants_.find(variant);
    if (it == delete_variants_.end()) continue;
    candidates.insert(candidates.end(), it->second.begin(), it->second.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  struct Hit {
    size_t distance;
    uint64_t frequency;
    const std::string* text;
  };
  std::vector<Hit> hits;
  for (uint32_t id : candidates) {
    const Word& w = words_[id];
    if (w.text == word) continue;
    const size_t d = damerau_levenshtein(query_cps, w.cps);
    if (d <= max_distance_) hits.push_back({d, w.frequency, &w.text});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return *a.text < *b.text;
  });

  std::vector<std::string> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) out.push_back(*h.text);
  return out;
}

const std::string& ConfusionIndex::sample_word(uint64_t r) const {
  if (r >= total_frequency_) r = total_frequency_ - 1;
  auto it = std::upper_bound(words_.begin(), words_.end(), r,
                             [](uint64_t value, const Word& w) {
                               return value < w.cumulative;
                             });
  return it->text;
}

std::vector<DictEntry> read_dictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dictionary", path);
  std::vector<DictEntry> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    DictEntry entry;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      entry.word = line;
    } else {
      entry.word = line.substr(0, tab);
      const std::string freq = line.substr(tab + 1);
      auto [ptr, ec] = std::from_chars(freq.data(), freq.data() + freq.size(),
                                       entry.frequency);
      if (ec != std::errc() || ptr != freq.data() + freq.size()) {
        throw ParseError("invalid frequency '" + freq + "'", line_no);
      }
    }
    if (entry.word.empty()) throw ParseError("empty dictionary word", line_no);
    out.push_back(std::move(entry));
  }
  return out;
}

ConfusionIndex ConfusionIndex::from_file(const std::string& path,
                                         size_t max_distance) {
  return ConfusionIndex(read_dictionary(path), max_distance);
}

}  // namespace ged
