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

#include "ged/align.hpp"

#include <algorithm>

namespace ged {

std::string edit_kind_name(EditKind kind) {
  switch (kind) {
    case EditKind::Match: return "match";
    case EditKind::Substitute: return "substitute";
    case EditKind::Delete: return "delete";
    case EditKind::Insert: return "insert";
  }
  return "match";
}

EditScript align(const TokenSequence& original, const TokenSequence& corrupted) {
  const auto& a = original.tokens;
  const auto& b = corrupted.tokens;
  const size_t m = a.size();
  const size_t n = b.size();

  // dist[i * (n + 1) + j] = edit distance between a[0..i) and b[0..j).
  std::vector<uint32_t> dist((m + 1) * (n + 1));
  auto at = [&](size_t i, size_t j) -> uint32_t& { return dist[i * (n + 1) + j]; };
  for (size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<uint32_t>(i);
  for (size_t j = 0; j <= n; ++j) at(0, j) = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      const uint32_t diag = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  // Backtrace from the end; at equal cost prefer match > substitute >
  // delete > insert.
  EditScript script;
  script.cost = at(m, n);
  script.ops.reserve(std::max(m, n));
  size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const uint32_t here = at(i, j);
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && at(i - 1, j - 1) == here) {
      script.ops.push_back({EditKind::Match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && a[i - 1] != b[j - 1] &&
               at(i - 1, j - 1) + 1 == here) {
      script.ops.push_back({EditKind::Substitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && at(i - 1, j) + 1 == here) {
      script.ops.push_back({EditKind::Delete, i - 1, std::nullopt});
      --i;
    } else {
      script.ops.push_back({EditKind::Insert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

LabeledSentence label_from_alignment(const EditScript& script,
                                     const TokenSequence& corrupted) {
  LabeledSentence out;
  out.tokens = corrupted.tokens;
  out.labels.assign(out.tokens.size(), Label::Correct);

  size_t covered = 0;
  bool after_gap = false;
  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditKind::Match:
        if (!op.corrupted_index || *op.corrupted_index >= out.tokens.size()) {
          throw std::invalid_argument("edit script does not fit the sentence");
        }
        if (after_gap) out.labels[*op.corrupted_index] = Label::Incorrect;
        after_gap = false;
        ++covered;
        break;
      case EditKind::Substitute:
      case EditKind::Insert:
        if (!op.corrupted_index || *op.corrupted_index >= out.tokens.size()) {
          throw std::invalid_argument("edit script does not fit the sentence");
        }
        out.labels[*op.corrupted_index] = Label::Incorrect;
        after_gap = false;
        ++covered;
        break;
      case EditKind::Delete:
        after_gap = true;
        break;
    }
  }
  if (covered != out.tokens.size()) {
    throw std::invalid_argument("edit script does not cover the sentence");
  }
  // A gap after the final corrupted token has no follower; mark the last token.
  if (after_gap && !out.tokens.empty()) {
    out.labels.back() = Label::Incorrect;
  }
  return out;
}

LabeledSentence label_pair(const ParallelPair& pair) {
  if (pair.degenerate) return LabeledSentence{};
  return label_from_alignment(align(pair.original, pair.corrupted), pair.corrupted);
}

std::vector<SpanEdit> extract_edits(const EditScript& script,
                                    const TokenSequence& original,
                                    const TokenSequence& corrupted) {
  std::vector<SpanEdit> out;
  size_t orig_pos = 0;
  size_t corr_pos = 0;
  bool in_run = false;
  SpanEdit run{};
  auto close_run = [&] {
    if (!in_run) return;
    run.original_end = orig_pos;
    run.corrupted_end = corr_pos;
    if (run.corrupted_begin == run.corrupted_end) {
      run.kind = EditKind::Delete;
    } else if (run.original_begin == run.original_end) {
      run.kind = EditKind::Insert;
    } else {
      run.kind = EditKind::Substitute;
    }
    out.push_back(run);
    in_run = false;
  };
  for (const EditOp& op : script.ops) {
    if (op.kind == EditKind::Match) {
      close_run();
      ++orig_pos;
      ++corr_pos;
      continue;
    }
    if (!in_run) {
      in_run = true;
      run = SpanEdit{};
      run.original_begin = orig_pos;
      run.corrupted_begin = corr_pos;
    }
    if (op.original_index) ++orig_pos;
    if (op.corrupted_index) ++corr_pos;
  }
  close_run();
  if (orig_pos != original.size() || corr_pos != corrupted.size()) {
    throw std::invalid_argument("edit script inconsistent with sequences");
  }
  return out;
}

}  // namespace ged
