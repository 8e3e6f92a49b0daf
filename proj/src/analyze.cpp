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

#include "ged/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ged/confusion.hpp"
#include "ged/rng.hpp"
#include "ged/unicode.hpp"

namespace ged {

std::string error_type_name(ErrorType type) {
  switch (type) {
    case ErrorType::Missing: return "MISSING";
    case ErrorType::Extra: return "EXTRA";
    case ErrorType::Order: return "ORDER";
    case ErrorType::Case: return "CASE";
    case ErrorType::Diacr: return "DIACR";
    case ErrorType::Punct: return "PUNCT";
    case ErrorType::Spell: return "SPELL";
    case ErrorType::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

bool all_punct_side(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return false;
  return std::all_of(tokens.begin(), tokens.end(),
                     [](const std::string& t) { return uni::all_punct(t); });
}

}  // namespace

ErrorType classify_edit(const Edit& edit) {
  const auto& orig = edit.original;
  const auto& corr = edit.corrupted;
  if (corr.empty()) return ErrorType::Missing;
  if (orig.empty()) return ErrorType::Extra;
  if (orig.size() == 2 && corr.size() == 2 && orig[0] == corr[1] &&
      orig[1] == corr[0] && orig[0] != orig[1]) {
    return ErrorType::Order;
  }
  const std::string orig_joined = join(orig);
  const std::string corr_joined = join(corr);
  if (uni::fold_case(orig_joined) == uni::fold_case(corr_joined)) {
    return ErrorType::Case;
  }
  if (uni::strip_diacritics(orig_joined) == uni::strip_diacritics(corr_joined)) {
    return ErrorType::Diacr;
  }
  if (all_punct_side(orig) || all_punct_side(corr)) return ErrorType::Punct;
  if (orig.size() == 1 && corr.size() == 1 &&
      damerau_levenshtein(orig[0], corr[0]) <= 2) {
    return ErrorType::Spell;
  }
  return ErrorType::Other;
}

TypeDistribution& TypeDistribution::operator+=(const TypeDistribution& other) {
  for (const auto& [category, n] : other.counts) {
    counts[category] += n;
  }
  total += other.total;
  return *this;
}

TypeDistribution type_distribution(const std::vector<Edit>& edits) {
  TypeDistribution dist;
  for (const Edit& e : edits) dist.add(error_type_name(classify_edit(e)));
  return dist;
}

double normalized_entropy(const TypeDistribution& dist, size_t k) {
  if (dist.total == 0) throw std::invalid_argument("empty distribution");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  size_t nonzero = 0;
  double entropy = 0.0;
  for (const auto& [category, n] : dist.counts) {
    if (n == 0) continue;
    ++nonzero;
    const double p = static_cast<double>(n) / static_cast<double>(dist.total);
    entropy -= p * std::log(p);
  }
  if (nonzero > k) {
    throw std::invalid_argument("distribution has more than k nonzero categories");
  }
  return entropy / std::log(static_cast<double>(k));
}

double mean_normalized_entropy(
    const std::vector<std::pair<TypeDistribution, size_t>>& dists) {
  if (dists.empty()) throw std::invalid_argument("no distributions given");
  double sum = 0.0;
  for (const auto& [dist, k] : dists) sum += normalized_entropy(dist, k);
  return sum / static_cast<double>(dists.size());
}

std::vector<DiscriminatorExample> build_discriminator_set(
    const std::vector<ParallelPair>& authentic,
    const std::vector<ParallelPair>& synthetic, uint64_t seed) {
  auto usable = [](const std::vector<ParallelPair>& pairs) {
    std::vector<const ParallelPair*> out;
    for (const ParallelPair& p : pairs) {
      if (!p.degenerate) out.push_back(&p);
    }
    return out;
  };
  auto auth = usable(authentic);
  auto synth = usable(synthetic);
  if (auth.empty()) throw std::invalid_argument("no usable authentic pairs");
  if (synth.empty()) throw std::invalid_argument("no usable synthetic pairs");

  const size_t per_class = std::min(auth.size(), synth.size());
  Rng rng(seed);
  auto downsample = [&](std::vector<const ParallelPair*>& side) {
    rng.shuffle(side);
    side.resize(per_class);
  };
  downsample(auth);
  downsample(synth);

  std::vector<DiscriminatorExample> out;
  out.reserve(2 * per_class);
  auto emit = [&](const std::vector<const ParallelPair*>& side, Origin origin) {
    for (const ParallelPair* p : side) {
      out.push_back({p->original.source_text.value_or(""),
                     p->corrupted.source_text.value_or(""), origin});
    }
  };
  emit(auth, Origin::Authentic);
  emit(synth, Origin::Synthetic);
  rng.shuffle(out);
  return out;
}

namespace {

EditKind edit_kind_from_name(const std::string& name, size_t line_no) {
  if (name == "substitute") return EditKind::Substitute;
  if (name == "delete") return EditKind::Delete;
  if (name == "insert") return EditKind::Insert;
  if (name == "match") return EditKind::Match;
  throw ParseError("unknown edit kind '" + name + "'", line_no);
}

}  // namespace

std::vector<Edit> read_edits_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open edit log", path);
  std::vector<Edit> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    Edit edit;
    edit.kind = edit_kind_from_name(obj.at("kind").get<std::string>(), line_no);
    edit.original = obj.at("original").get<std::vector<std::string>>();
    edit.corrupted = obj.at("corrupted").get<std::vector<std::string>>();
    out.push_back(std::move(edit));
  }
  return out;
}

void write_edits_jsonl(const std::vector<Edit>& edits, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write edit log", path);
  for (const Edit& e : edits) {
    nlohmann::json obj;
    obj["kind"] = edit_kind_name(e.kind);
    obj["original"] = e.original;
    obj["corrupted"] = e.corrupted;
    out << obj.dump() << '\n';
  }
  if (!out) throw IoError("write failed", path);
}

TypeDistribution read_clusters_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cluster file", path);
  TypeDistribution dist;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.rfind('\t');
    if (tab == std::string::npos || tab + 1 == line.size()) {
      throw ParseError("expected `edit<TAB>cluster_id`", line_no);
    }
    dist.add(line.substr(tab + 1));
  }
  return dist;
}

TypeDistribution distribution_from_json(const nlohmann::json& j) {
  TypeDistribution dist;
  for (const auto& [category, n] : j.at("counts").items()) {
    dist.add(category, n.get<uint64_t>());
  }
  if (j.contains("total") && j["total"].get<uint64_t>() != dist.total) {
    throw ParseError("distribution total does not match the sum of its counts");
  }
  return dist;
}

nlohmann::json distribution_to_json(const TypeDistribution& dist) {
  nlohmann::json j;
  j["counts"] = dist.counts;
  j["total"] = dist.total;
  j["taxonomy"] =
      "coarse-8way-approximation";  // not a fine-grained per-language scheme
  return j;
}

}  // namespace ged
