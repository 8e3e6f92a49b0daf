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

#include "ged/unicode.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <memory>
#include <stdexcept>

namespace ged::uni {

std::vector<Codepoint> decode(const std::string& utf8) {
  std::vector<Codepoint> out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  int32_t i = 0;
  const int32_t n = static_cast<int32_t>(utf8.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(s, i, n, c);
    if (c < 0) c = 0xFFFD;
    out.push_back(static_cast<Codepoint>(c));
  }
  return out;
}

std::string encode_one(Codepoint cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool err = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
  if (err) return "\xEF\xBF\xBD";
  return std::string(reinterpret_cast<char*>(buf), static_cast<size_t>(len));
}

std::string encode(const std::vector<Codepoint>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (Codepoint cp : cps) out += encode_one(cp);
  return out;
}

bool is_whitespace(Codepoint cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_punct(Codepoint cp) {
  const auto c = static_cast<UChar32>(cp);
  return u_ispunct(c) || u_hasBinaryProperty(c, UCHAR_MATH) ||
         u_charType(c) == U_CURRENCY_SYMBOL || u_charType(c) == U_MODIFIER_SYMBOL;
}

bool all_punct(const std::string& utf8) {
  if (utf8.empty()) return false;
  for (Codepoint cp : decode(utf8)) {
    if (!is_punct(cp)) return false;
  }
  return true;
}

std::string fold_case(const std::string& utf8) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(utf8);
  u.foldCase();
  std::string out;
  u.toUTF8String(out);
  return out;
}

std::string strip_diacritics(const std::string& utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  icu::UnicodeString decomposed =
      nfd->normalize(icu::UnicodeString::fromUTF8(utf8), status);
  if (U_FAILURE(status)) throw std::runtime_error("NFD normalization failed");
  std::string tmp;
  decomposed.toUTF8String(tmp);
  std::vector<Codepoint> kept;
  for (Codepoint cp : decode(tmp)) {
    const int8_t t = u_charType(static_cast<UChar32>(cp));
    if (t == U_NON_SPACING_MARK || t == U_ENCLOSING_MARK) continue;
    kept.push_back(cp);
  }
  return encode(kept);
}

std::vector<std::string> segment_words(const std::string& utf8) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> brk(
      icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status)) throw std::runtime_error("ICU word break unavailable");
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(utf8);
  brk->setText(text);

  std::vector<std::string> out;
  int32_t start = brk->first();
  for (int32_t end = brk->next(); end != icu::BreakIterator::DONE;
       start = end, end = brk->next()) {
    icu::UnicodeString piece;
    text.extractBetween(start, end, piece);
    std::string s;
    piece.toUTF8String(s);
    bool blank = true;
    for (Codepoint cp : decode(s)) {
      if (!is_whitespace(cp)) {
        blank = false;
        break;
      }
    }
    if (!blank) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ged::uni
