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

#ifndef GED_TYPES_HPP
#define GED_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ged {

/// Raised on malformed input files; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& message, const std::string& path)
      : std::runtime_error(message + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Ordered token list, the unit of all processing. Tokens are non-empty
/// and contain no tab or newline.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::optional<std::string> source_text;
  std::optional<std::string> language;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
};

/// Binary GED labels: "c" correct, "i" incorrect.
enum class Label : uint8_t { Correct, Incorrect };

inline char label_char(Label l) { return l == Label::Correct ? 'c' : 'i'; }

struct LabeledSentence {
  std::vector<std::string> tokens;
  std::vector<Label> labels;

  bool operator==(const LabeledSentence&) const = default;
};

enum class Provenance : uint8_t { Authentic, SyntheticRules, SyntheticExternal };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

/// A grammatical sentence and its ungrammatical counterpart.
struct ParallelPair {
  TokenSequence original;
  TokenSequence corrupted;
  Provenance provenance = Provenance::Authentic;
  bool degenerate = false;  // either side blank; skipped by labeling
  uint64_t seed = 0;        // sentence seed for synthetic pairs
};

struct M2Edit {
  size_t start = 0;
  size_t end = 0;
  std::string type;
  std::string correction;
  std::string required = "REQUIRED";
  std::string comment = "-NONE-";
  int annotator = 0;
};

struct M2Record {
  std::vector<std::string> source_tokens;
  std::vector<M2Edit> edits;  // sorted by (start, end); noop edits dropped
};

/// Per-token P(label = i) for externally produced GED predictions.
struct PredictionSentence {
  std::vector<std::string> tokens;
  std::vector<double> probabilities;
};

struct PredictionFile {
  std::vector<PredictionSentence> sentences;
};

}  // namespace ged

#endif  // GED_TYPES_HPP
