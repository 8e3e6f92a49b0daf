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

#include "ged/corpus_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ged {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Authentic: return "authentic";
    case Provenance::SyntheticRules: return "synthetic-rules";
    case Provenance::SyntheticExternal: return "synthetic-external";
  }
  return "authentic";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "authentic") return Provenance::Authentic;
  if (name == "synthetic-rules") return Provenance::SyntheticRules;
  if (name == "synthetic-external") return Provenance::SyntheticExternal;
  throw ParseError("unknown provenance '" + name + "'");
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing", path);
  return out;
}

// getline that tolerates a missing trailing newline.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

size_t parse_index(std::string_view field, size_t line_no) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.begin(), field.end(), value);
  if (ec != std::errc() || ptr != field.end()) {
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(field) + "'",
                     line_no);
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// Multi-GED TSV

std::vector<LabeledSentence> parse_multiged_tsv(std::istream& in) {
  std::vector<LabeledSentence> out;
  LabeledSentence current;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      out.push_back(std::move(current));
      current = LabeledSentence{};
    }
  };
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected `token<TAB>label`", line_no);
    }
    const std::string token = line.substr(0, tab);
    const std::string label = line.substr(tab + 1);
    if (label == "c") {
      current.labels.push_back(Label::Correct);
    } else if (label == "i") {
      current.labels.push_back(Label::Incorrect);
    } else {
      throw ParseError("unknown label '" + label + "' (expected c or i)", line_no);
    }
    current.tokens.push_back(token);
  }
  flush();
  return out;
}

std::vector<LabeledSentence> read_multiged_tsv(const std::string& path) {
  auto in = open_input(path);
  return parse_multiged_tsv(in);
}

void write_multiged_tsv(const std::vector<LabeledSentence>& sentences,
                        std::ostream& out) {
  for (const LabeledSentence& s : sentences) {
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      out << s.tokens[i] << '\t' << label_char(s.labels[i]) << '\n';
    }
    out << '\n';
  }
}

void write_multiged_tsv(const std::vector<LabeledSentence>& sentences,
                        const std::string& path) {
  auto out = open_output(path);
  write_multiged_tsv(sentences, out);
  if (!out) throw IoError("write failed", path);
}

// ---------------------------------------------------------------------------
// M² format

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t pos = s.find("|||"); pos != std::string::npos;
       pos = s.find("|||", start)) {
    out.push_back(s.substr(start, pos - start));
    start = pos + 3;
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

std::vector<M2Record> parse_m2(std::istream& in) {
  std::vector<M2Record> out;
  bool have_record = false;
  M2Record current;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (have_record) {
      std::stable_sort(current.edits.begin(), current.edits.end(),
                       [](const M2Edit& a, const M2Edit& b) {
                         return std::tie(a.start, a.end) < std::tie(b.start, b.end);
                       });
      out.push_back(std::move(current));
      current = M2Record{};
      have_record = false;
    }
  };
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.rfind("S ", 0) == 0 || line == "S") {
      flush();
      have_record = true;
      if (line.size() > 2) {
        for (auto& tok : split(line.substr(2), ' ')) {
          if (!tok.empty()) current.source_tokens.push_back(std::move(tok));
        }
      }
      continue;
    }
    if (line.rfind("A ", 0) == 0) {
      if (!have_record) throw ParseError("A-line before any S-line", line_no);
      const std::string body = line.substr(2);
      const size_t space1 = body.find(' ');
      if (space1 == std::string::npos) throw ParseError("malformed A-line", line_no);
      const size_t bar = body.find("|||");
      if (bar == std::string::npos || bar < space1) {
        throw ParseError("malformed A-line", line_no);
      }
      std::string start_s = body.substr(0, space1);
      std::string end_s = body.substr(space1 + 1, bar - space1 - 1);
      while (!end_s.empty() && end_s.back() == ' ') end_s.pop_back();
      const auto fields = split_fields(body.substr(bar + 3));
      if (fields.size() < 5) {
        throw ParseError("A-line needs type|||correction|||required|||comment|||annotator",
                         line_no);
      }
      M2Edit edit;
      edit.type = fields[0];
      edit.correction = fields[1];
      edit.required = fields[2];
      edit.comment = fields[3];
      edit.annotator = static_cast<int>(parse_index(fields[4], line_no));
      if (edit.type == "noop") continue;  // noop carries -1 -1 offsets
      edit.start = parse_index(start_s, line_no);
      edit.end = parse_index(end_s, line_no);
      if (edit.start > edit.end) throw ParseError("edit start > end", line_no);
      if (edit.end > current.source_tokens.size()) {
        throw ParseError("edit end " + std::to_string(edit.end) +
                             " exceeds token count " +
                             std::to_string(current.source_tokens.size()),
                         line_no);
      }
      current.edits.push_back(std::move(edit));
      continue;
    }
    throw ParseError("expected S-line, A-line or blank line", line_no);
  }
  flush();
  return out;
}

std::vector<M2Record> read_m2(const std::string& path) {
  auto in = open_input(path);
  return parse_m2(in);
}

void write_m2(const std::vector<M2Record>& records, std::ostream& out) {
  for (const M2Record& rec : records) {
    out << 'S';
    for (const auto& tok : rec.source_tokens) out << ' ' << tok;
    out << '\n';
    for (const M2Edit& e : rec.edits) {
      out << "A " << e.start << ' ' << e.end << "|||" << e.type << "|||"
          << e.correction << "|||" << e.required << "|||" << e.comment << "|||"
          << e.annotator << '\n';
    }
    out << '\n';
  }
}

void write_m2(const std::vector<M2Record>& records, const std::string& path) {
  auto out = open_output(path);
  write_m2(records, out);
  if (!out) throw IoError("write failed", path);
}

LabeledSentence m2_to_labels(const M2Record& record, int annotator) {
  LabeledSentence out;
  out.tokens = record.source_tokens;
  out.labels.assign(out.tokens.size(), Label::Correct);
  if (record.edits.empty()) return out;

  std::set<int> annotators;
  for (const M2Edit& e : record.edits) annotators.insert(e.annotator);
  if (!annotators.count(annotator)) {
    std::string available;
    for (int a : annotators) {
      if (!available.empty()) available += ", ";
      available += std::to_string(a);
    }
    throw ParseError("annotator " + std::to_string(annotator) +
                     " not present; available: " + available);
  }
  for (const M2Edit& e : record.edits) {
    if (e.annotator != annotator) continue;
    if (e.start == e.end) {
      // Insertion point: mark the token it precedes, or the last token
      // when the insertion sits at the end of the sentence.
      if (out.tokens.empty()) continue;
      const size_t pos = e.start < out.tokens.size() ? e.start : out.tokens.size() - 1;
      out.labels[pos] = Label::Incorrect;
    } else {
      for (size_t i = e.start; i < e.end; ++i) out.labels[i] = Label::Incorrect;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parallel corpora

namespace {

ParallelPair make_pair(std::string original, std::string corrupted) {
  ParallelPair pair;
  pair.degenerate = original.empty() || corrupted.empty();
  pair.original.source_text = std::move(original);
  pair.corrupted.source_text = std::move(corrupted);
  return pair;
}

}  // namespace

std::vector<ParallelPair> read_parallel(const std::string& path_original,
                                        const std::string& path_corrupted) {
  const auto originals = read_lines(path_original);
  const auto corrupted = read_lines(path_corrupted);
  if (originals.size() != corrupted.size()) {
    throw ParseError("line-count mismatch: " + path_original + " has " +
                     std::to_string(originals.size()) + " lines, " +
                     path_corrupted + " has " + std::to_string(corrupted.size()));
  }
  std::vector<ParallelPair> out;
  out.reserve(originals.size());
  for (size_t i = 0; i < originals.size(); ++i) {
    out.push_back(make_pair(originals[i], corrupted[i]));
  }
  return out;
}

std::vector<ParallelPair> read_parallel_tsv(const std::string& path) {
  auto in = open_input(path);
  std::vector<ParallelPair> out;
  std::string line;
  size_t line_no = 0;
  while (next_line(in, line)) {
    ++line_no;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected `original<TAB>corrupted`", line_no);
    }
    out.push_back(make_pair(line.substr(0, tab), line.substr(tab + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Synthetic-pair JSON lines

std::vector<ParallelPair> read_pairs_jsonl(const std::string& path) {
  auto in = open_input(path);
  std::vector<ParallelPair> out;
  std::string line;
  size_t line_no = 0;
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.contains("original") || !obj.contains("corrupted")) {
      throw ParseError("pair object needs 'original' and 'corrupted'", line_no);
    }
    ParallelPair pair = make_pair(obj["original"].get<std::string>(),
                                  obj["corrupted"].get<std::string>());
    if (obj.contains("language") && !obj["language"].is_null()) {
      pair.original.language = obj["language"].get<std::string>();
      pair.corrupted.language = pair.original.language;
    }
    if (obj.contains("provenance")) {
      pair.provenance = provenance_from_name(obj["provenance"].get<std::string>());
    }
    if (obj.contains("seed")) pair.seed = obj["seed"].get<uint64_t>();
    out.push_back(std::move(pair));
  }
  return out;
}

void write_pairs_jsonl(const std::vector<ParallelPair>& pairs,
                       const std::string& path) {
  auto out = open_output(path);
  for (const ParallelPair& pair : pairs) {
    nlohmann::json obj;
    obj["original"] = pair.original.source_text.value_or("");
    obj["corrupted"] = pair.corrupted.source_text.value_or("");
    if (pair.original.language) {
      obj["language"] = *pair.original.language;
    } else {
      obj["language"] = nullptr;
    }
    obj["provenance"] = provenance_name(pair.provenance);
    obj["seed"] = pair.seed;
    out << obj.dump() << '\n';
  }
  if (!out) throw IoError("write failed", path);
}

// ---------------------------------------------------------------------------
// Prediction files

PredictionFile parse_predictions(std::istream& in) {
  PredictionFile out;
  PredictionSentence current;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      out.sentences.push_back(std::move(current));
      current = PredictionSentence{};
    }
  };
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected `token<TAB>probability`", line_no);
    }
    const std::string field = line.substr(tab + 1);
    double prob;
    if (field == "c") {
      prob = 0.0;
    } else if (field == "i") {
      prob = 1.0;
    } else {
      try {
        size_t consumed = 0;
        prob = std::stod(field, &consumed);
        if (consumed != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw ParseError("invalid probability '" + field + "'", line_no);
      }
      if (prob < 0.0 || prob > 1.0) {
        throw ParseError("probability " + field + " outside [0,1]", line_no);
      }
    }
    current.tokens.push_back(line.substr(0, tab));
    current.probabilities.push_back(prob);
  }
  flush();
  return out;
}

PredictionFile read_predictions(const std::string& path) {
  auto in = open_input(path);
  return parse_predictions(in);
}

// ---------------------------------------------------------------------------
// Plain lines

std::vector<std::string> read_lines(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> out;
  std::string line;
  while (next_line(in, line)) out.push_back(line);
  return out;
}

void write_lines(const std::vector<std::string>& lines, const std::string& path) {
  auto out = open_output(path);
  for (const auto& line : lines) out << line << '\n';
  if (!out) throw IoError("write failed", path);
}

}  // namespace ged
