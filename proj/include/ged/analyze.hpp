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

#ifndef GED_ANALYZE_HPP
#define GED_ANALYZE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ged/align.hpp"
#include "ged/types.hpp"

namespace ged {

/// Coarse language-agnostic error taxonomy (an approximation of
/// fine-grained per-language annotation schemes).
enum class ErrorType : uint8_t {
  Missing,   // pure deletion
  Extra,     // pure insertion
  Order,     // adjacent transposition (x,y) -> (y,x)
  Case,      // equal case-insensitively
  Diacr,     // equal after diacritic stripping
  Punct,     // either side all-punctuation
  Spell,     // single-token substitution within char distance 2
  Other,
};

inline constexpr size_t kErrorTypeCount = 8;

std::string error_type_name(ErrorType type);

/// One extracted edit, carried with the token spans it covers.
struct Edit {
  EditKind kind;
  std::vector<std::string> original;
  std::vector<std::string> corrupted;
};

/// Assigns exactly one type per edit under a fixed precedence
/// (Missing > Extra > Order > Case > Diacr > Punct > Spell > Other).
ErrorType classify_edit(const Edit& edit);

/// Frequency distribution over error types or external cluster ids.
struct TypeDistribution {
  std::map<std::string, uint64_t> counts;
  uint64_t total = 0;

  void add(const std::string& category, uint64_t n = 1) {
    counts[category] += n;
    total += n;
  }
  TypeDistribution& operator+=(const TypeDistribution& other);
};

TypeDistribution type_distribution(const std::vector<Edit>& edits);

/// Shannon entropy (natural log) divided by ln k. Requires total > 0,
/// k >= 2, and no more than k nonzero categories.
double normalized_entropy(const TypeDistribution& dist, size_t k);

double mean_normalized_entropy(
    const std::vector<std::pair<TypeDistribution, size_t>>& dists);

/// One sentence pair for the authentic-vs-synthetic discriminator task.
enum class Origin : uint8_t { Authentic, Synthetic };

inline std::string origin_name(Origin o) {
  return o == Origin::Authentic ? "authentic" : "synthetic";
}

struct DiscriminatorExample {
  std::string grammatical;
  std::string ungrammatical;
  Origin origin;
};

/// Balances the two sides by seeded downsampling of the larger one and
/// shuffles deterministically. Degenerate pairs are dropped first.
std::vector<DiscriminatorExample> build_discriminator_set(
    const std::vector<ParallelPair>& authentic,
    const std::vector<ParallelPair>& synthetic, uint64_t seed);

// Edit-log JSON lines: one object per edit with fields kind, original,
// corrupted (token arrays).
std::vector<Edit> read_edits_jsonl(const std::string& path);
void write_edits_jsonl(const std::vector<Edit>& edits, const std::string& path);

/// External clusterings: `edit<TAB>cluster_id` lines, one distribution
/// over cluster ids.
TypeDistribution read_clusters_tsv(const std::string& path);

TypeDistribution distribution_from_json(const nlohmann::json& j);
nlohmann::json distribution_to_json(const TypeDistribution& dist);

}  // namespace ged

#endif  // GED_ANALYZE_HPP
