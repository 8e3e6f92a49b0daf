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

#ifndef GED_ALIGN_HPP
#define GED_ALIGN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ged/types.hpp"

namespace ged {

enum class EditKind : uint8_t { Match, Substitute, Delete, Insert };

std::string edit_kind_name(EditKind kind);

/// One alignment step. Match/Substitute carry both indices, Delete only
/// the original index, Insert only the corrupted index.
struct EditOp {
  EditKind kind;
  std::optional<size_t> original_index;
  std::optional<size_t> corrupted_index;

  bool operator==(const EditOp&) const = default;
};

/// Minimum-cost token alignment under unit costs. Indices on each side
/// are strictly increasing across ops; cost counts non-match ops.
struct EditScript {
  std::vector<EditOp> ops;
  size_t cost = 0;
};

/// Levenshtein alignment with unit costs (match 0, everything else 1).
/// Tie-break among minimum-cost scripts: resolving from the end of both
/// sequences, prefer match > substitute > delete > insert.
EditScript align(const TokenSequence& original, const TokenSequence& corrupted);

/// Labels the corrupted side: a token is incorrect when it is substituted,
/// inserted, or immediately follows a deletion gap. A gap after the final
/// corrupted token marks the last token.
LabeledSentence label_from_alignment(const EditScript& script,
                                     const TokenSequence& corrupted);

/// align + label_from_alignment; degenerate pairs yield an empty sentence.
LabeledSentence label_pair(const ParallelPair& pair);

/// A maximal run of adjacent non-match ops merged into one span edit.
struct SpanEdit {
  EditKind kind;  // Delete if corrupted span empty, Insert if original empty
  size_t original_begin = 0;
  size_t original_end = 0;
  size_t corrupted_begin = 0;
  size_t corrupted_end = 0;

  bool operator==(const SpanEdit&) const = default;
};

std::vector<SpanEdit> extract_edits(const EditScript& script,
                                    const TokenSequence& original,
                                    const TokenSequence& corrupted);

}  // namespace ged

#endif  // GED_ALIGN_HPP
