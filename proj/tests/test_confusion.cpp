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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ged/confusion.hpp"
#include "ged/rng.hpp"
#include "oracle.hpp"

using ged::ConfusionIndex;
using ged::DictEntry;

namespace {

std::vector<DictEntry> entries(std::vector<std::string> words) {
  std::vector<DictEntry> out;
  for (auto& w : words) out.push_back({std::move(w), 1});
  return out;
}

std::string random_word(ged::Rng& rng) {
  const size_t len = 3 + rng.next_below(8);
  std::string w;
  for (size_t i = 0; i < len; ++i) {
    w += static_cast<char>('a' + rng.next_below(26));
  }
  return w;
}

}  // namespace

TEST_CASE("damerau-levenshtein basics") {
  CHECK(ged::damerau_levenshtein("", "") == 0);
  CHECK(ged::damerau_levenshtein("abc", "abc") == 0);
  CHECK(ged::damerau_levenshtein("abc", "abd") == 1);
  CHECK(ged::damerau_levenshtein("abc", "acb") == 1);  // transposition
  CHECK(ged::damerau_levenshtein("abc", "ab") == 1);
  CHECK(ged::damerau_levenshtein("abc", "abcd") == 1);
  CHECK(ged::damerau_levenshtein("", "xyz") == 3);
  CHECK(ged::damerau_levenshtein("kitten", "sitting") == 3);
  // multi-byte codepoints count as single symbols
  CHECK(ged::damerau_levenshtein("kräsa", "krasa") == 1);
}

TEST_CASE("lookup on a tiny hand-checked dictionary") {
  ConfusionIndex index(entries({"cat", "cut", "cart", "dog"}), 1);
  SUBCASE("cat finds cut and cart") {
    const auto result = index.lookup("cat");
    // equal distance 1, no frequencies: lexicographic
    CHECK(result == std::vector<std::string>{"cart", "cut"});
  }
  SUBCASE("dog has no neighbors within 1") {
    CHECK(index.lookup("dog").empty());
  }
  SUBCASE("out-of-vocabulary query") {
    CHECK(index.lookup("qqq").empty());
  }
  SUBCASE("self is excluded") {
    const auto result = index.lookup("cut");
    CHECK(std::find(result.begin(), result.end(), "cut") == result.end());
  }
  SUBCASE("empty query finds nothing on words of length >= 3") {
    CHECK(index.lookup("").empty());
  }
}

TEST_CASE("ranking: distance, then frequency, then lexicographic") {
  std::vector<DictEntry> dict = {
      {"care", 5}, {"cart", 50}, {"cat", 1}, {"carts", 2}, {"card", 50}};
  ConfusionIndex index(std::move(dict), 2);
  const auto result = index.lookup("cars");
  // distance 1: card(50) and cart(50) tie -> lexicographic, then care(5),
  // then carts(2); cat is the only distance-2 hit
  CHECK(result ==
        std::vector<std::string>{"card", "cart", "care", "carts", "cat"});
}

TEST_CASE("empty dictionary and bad distance are rejected") {
  CHECK_THROWS(ConfusionIndex({}, 1));
  CHECK_THROWS(ConfusionIndex(entries({"a"}), 3));
  CHECK_THROWS(ConfusionIndex(entries({"a"}), 0));
}

TEST_CASE("duplicate dictionary words merge their frequencies") {
  std::vector<DictEntry> dict = {{"cat", 2}, {"cat", 3}, {"cut", 1}};
  ConfusionIndex index(std::move(dict), 1);
  CHECK(index.size() == 2);
  CHECK(index.total_frequency() == 6);
}

TEST_CASE("index lookups equal brute-force scans on random dictionaries") {
  ged::Rng rng(17);
  for (size_t max_distance : {1u, 2u}) {
    std::vector<std::string> words;
    for (int i = 0; i < 800; ++i) words.push_back(random_word(rng));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    ConfusionIndex index(entries(words), max_distance);
    for (int q = 0; q < 100; ++q) {
      // half in-vocabulary, half perturbed
      std::string query = words[rng.next_below(words.size())];
      if (q % 2 == 1 && !query.empty()) {
        query[rng.next_below(query.size())] =
            static_cast<char>('a' + rng.next_below(26));
      }
      auto got = index.lookup(query);
      auto expected = ged::oracle::scan_confusions(words, query, max_distance);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("frequency-weighted sampling covers the whole dictionary") {
  std::vector<DictEntry> dict = {{"aa", 1}, {"bb", 9}};
  ConfusionIndex index(std::move(dict), 1);
  REQUIRE(index.total_frequency() == 10);
  CHECK(index.sample_word(0) == "aa");
  CHECK(index.sample_word(1) == "bb");
  CHECK(index.sample_word(9) == "bb");
}
