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

#ifndef GED_UNICODE_HPP
#define GED_UNICODE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ged::uni {

using Codepoint = char32_t;

/// Decodes UTF-8 into codepoints. Invalid byte sequences decode to U+FFFD.
std::vector<Codepoint> decode(const std::string& utf8);

std::string encode(const std::vector<Codepoint>& cps);
std::string encode_one(Codepoint cp);

bool is_whitespace(Codepoint cp);
bool is_punct(Codepoint cp);

/// True if every codepoint of the (non-empty) string is punctuation.
bool all_punct(const std::string& utf8);

/// Full Unicode case folding.
std::string fold_case(const std::string& utf8);

/// NFD decomposition with all combining marks removed.
std::string strip_diacritics(const std::string& utf8);

/// UAX#29 word segmentation; whitespace segments are dropped, so
/// punctuation comes out as standalone tokens.
std::vector<std::string> segment_words(const std::string& utf8);

}  // namespace ged::uni

#endif  // GED_UNICODE_HPP
