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

#ifndef GED_TOKENIZE_HPP
#define GED_TOKENIZE_HPP

#include <optional>
#include <string>

#include "ged/types.hpp"

namespace ged {

/// Built-in tokenizers. External language-specific tools are not wrapped;
/// users run them upstream and feed pre-tokenized text (Pretokenized is
/// a whitespace split over already-segmented input).
enum class TokenizerKind : uint8_t {
  Whitespace,
  UnicodeWords,
  PerCharacter,
  Pretokenized,
};

struct TokenizerScheme {
  TokenizerKind kind = TokenizerKind::Whitespace;
  std::optional<std::string> language;
};

std::optional<TokenizerKind> tokenizer_kind_from_name(const std::string& name);
std::string tokenizer_kind_name(TokenizerKind kind);

/// Splits text into tokens covering all non-whitespace content in order.
/// Empty text yields an empty sequence; never throws.
TokenSequence tokenize(const std::string& text, const TokenizerScheme& scheme);

/// Joins tokens with single spaces, attaching closing punctuation left
/// and opening brackets right.
std::string detokenize(const TokenSequence& tokens);

}  // namespace ged

#endif  // GED_TOKENIZE_HPP
