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

#ifndef GED_CORPUS_IO_HPP
#define GED_CORPUS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ged/types.hpp"

namespace ged {

// --- Multi-GED TSV: `token<TAB>label`, label in {c,i}, blank line between
// sentences, UTF-8, LF. The writer terminates every sentence block
// (including the last) with exactly one blank line.

std::vector<LabeledSentence> read_multiged_tsv(const std::string& path);
std::vector<LabeledSentence> parse_multiged_tsv(std::istream& in);
void write_multiged_tsv(const std::vector<LabeledSentence>& sentences,
                        const std::string& path);
void write_multiged_tsv(const std::vector<LabeledSentence>& sentences,
                        std::ostream& out);

// --- M² format. noop edits are dropped at parse time; edits are sorted
// by (start, end).

std::vector<M2Record> read_m2(const std::string& path);
std::vector<M2Record> parse_m2(std::istream& in);
void write_m2(const std::vector<M2Record>& records, const std::string& path);
void write_m2(const std::vector<M2Record>& records, std::ostream& out);

/// Token-level labels from one annotation layer. Tokens inside an edit span
/// become i; an insertion (start == end) marks the token at `start`, or the
/// last token when the insertion sits at the sentence end.
LabeledSentence m2_to_labels(const M2Record& record, int annotator);

// --- Parallel corpora: two aligned one-sentence-per-line files, or a
// single TSV `original<TAB>corrupted`. Sides are carried untokenized.

std::vector<ParallelPair> read_parallel(const std::string& path_original,
                                        const std::string& path_corrupted);
std::vector<ParallelPair> read_parallel_tsv(const std::string& path);

// --- Synthetic-pair JSON lines: one object per pair with fields
// original, corrupted, language, provenance, seed.

std::vector<ParallelPair> read_pairs_jsonl(const std::string& path);
void write_pairs_jsonl(const std::vector<ParallelPair>& pairs,
                       const std::string& path);

// --- Prediction files: `token<TAB>probability`, blank-line separated.
// Hard labels are accepted (c -> 0.0, i -> 1.0).

PredictionFile read_predictions(const std::string& path);
PredictionFile parse_predictions(std::istream& in);

// --- Plain sentence-per-line files.

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::vector<std::string>& lines, const std::string& path);

}  // namespace ged

#endif  // GED_CORPUS_IO_HPP
