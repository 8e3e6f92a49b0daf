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

#include "ged/tokenize.hpp"

#include "ged/unicode.hpp"

namespace ged {

std::optional<TokenizerKind> tokenizer_kind_from_name(const std::string& name) {
  if (name == "whitespace") return TokenizerKind::Whitespace;
  if (name == "unicode-words") return TokenizerKind::UnicodeWords;
  if (name == "per-character") return TokenizerKind::PerCharacter;
  if (name == "pretokenized") return TokenizerKind::Pretokenized;
  return std::nullopt;
}

std::string tokenizer_kind_name(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::Whitespace: return "whitespace";
    case TokenizerKind::UnicodeWords: return "unicode-words";
    case TokenizerKind::PerCharacter: return "per-character";
    case TokenizerKind::Pretokenized: return "pretokenized";
  }
  return "whitespace";
}

namespace {

std::vector<std::string> split_whitespace(const std::string& text) {
  std::vector<std::string> out;
  std::vector<uni::Codepoint> current;
  for (uni::Codepoint cp : uni::decode(text)) {
    if (uni::is_whitespace(cp)) {
      if (!current.empty()) {
        out.push_back(uni::encode(current));
        current.clear();
      }
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) out.push_back(uni::encode(current));
  return out;
}

std::vector<std::string> split_per_character(const std::string& text) {
  std::vector<std::string> out;
  for (uni::Codepoint cp : uni::decode(text)) {
    if (!uni::is_whitespace(cp)) out.push_back(uni::encode_one(cp));
  }
  return out;
}

}  // namespace

TokenSequence tokenize(const std::string& text, const TokenizerScheme& scheme) {
  TokenSequence seq;
  seq.source_text = text;
  seq.language = scheme.language;
  switch (scheme.kind) {
    case TokenizerKind::Whitespace:
    case TokenizerKind::Pretokenized:
      seq.tokens = split_whitespace(text);
      break;
    case TokenizerKind::UnicodeWords:
      seq.tokens = uni::segment_words(text);
      break;
    case TokenizerKind::PerCharacter:
      seq.tokens = split_per_character(text);
      break;
  }
  return seq;
}

namespace {

bool attaches_left(const std::string& token) {
  static const std::string kLeft = ".,!?;:)]}";
  if (token.size() == 1 && kLeft.find(token[0]) != std::string::npos) return true;
  return token == "»";  // »
}

bool attaches_right(const std::string& token) {
  static const std::string kRight = "([{";
  if (token.size() == 1 && kRight.find(token[0]) != std::string::npos) return true;
  return token == "«";  // «
}

}  // namespace

std::string detokenize(const TokenSequence& tokens) {
  std::string out;
  bool suppress_space = false;
  for (const std::string& tok : tokens.tokens) {
    if (!out.empty() && !suppress_space && !attaches_left(tok)) out += ' ';
    out += tok;
    suppress_space = attaches_right(tok);
  }
  return out;
}

}  // namespace ged
