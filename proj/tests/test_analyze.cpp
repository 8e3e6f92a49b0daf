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

#include <cmath>

#include "ged/analyze.hpp"
#include "ged/rng.hpp"

using ged::Edit;
using ged::EditKind;
using ged::ErrorType;
using ged::TypeDistribution;

namespace {

Edit edit(EditKind kind, std::vector<std::string> orig,
          std::vector<std::string> corr) {
  return Edit{kind, std::move(orig), std::move(corr)};
}

TypeDistribution dist_of(std::vector<uint64_t> counts) {
  TypeDistribution d;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) d.add("cat" + std::to_string(i), counts[i]);
  }
  return d;
}

}  // namespace

TEST_CASE("classify_edit precedence") {
  CHECK(ged::classify_edit(edit(EditKind::Delete, {"very"}, {})) ==
        ErrorType::Missing);
  CHECK(ged::classify_edit(edit(EditKind::Insert, {}, {"very"})) ==
        ErrorType::Extra);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"x", "y"}, {"y", "x"})) ==
        ErrorType::Order);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"The"}, {"the"})) ==
        ErrorType::Case);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"krasa"}, {"krása"})) ==
        ErrorType::Diacr);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"."}, {","})) ==
        ErrorType::Punct);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"receive"}, {"recieve"})) ==
        ErrorType::Spell);
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"completely"},
                                {"dog"})) == ErrorType::Other);
  // multi-token substitution is not SPELL even if short
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"a", "b"}, {"ab"})) ==
        ErrorType::Other);
  // case has precedence over spell
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"ABC"}, {"abc"})) ==
        ErrorType::Case);
}

TEST_CASE("diacritic stripping handles precomposed and combining forms") {
  // U+00E1 precomposed vs "a" + U+0301 combining acute: byte strings differ
  // but both strip to "a"
  CHECK(ged::classify_edit(edit(EditKind::Substitute, {"\u00E1"},
                                {"a\u0301"})) == ErrorType::Diacr);
}

TEST_CASE("type_distribution tallies") {
  SUBCASE("empty log") {
    const auto d = ged::type_distribution({});
    CHECK(d.total == 0);
    CHECK_THROWS(ged::normalized_entropy(d, 8));
  }
  SUBCASE("homogeneous log") {
    const std::vector<Edit> edits = {edit(EditKind::Delete, {"a"}, {}),
                                     edit(EditKind::Delete, {"b"}, {}),
                                     edit(EditKind::Delete, {"c"}, {})};
    const auto d = ged::type_distribution(edits);
    CHECK(d.total == 3);
    CHECK(d.counts.at("MISSING") == 3);
  }
  SUBCASE("mixed hand-built log of 5 edits") {
    const std::vector<Edit> edits = {
        edit(EditKind::Delete, {"a"}, {}),
        edit(EditKind::Insert, {}, {"a"}),
        edit(EditKind::Substitute, {"The"}, {"the"}),
        edit(EditKind::Substitute, {"cat"}, {"cta"}),
        edit(EditKind::Substitute, {"cat"}, {"cta"}),
    };
    const auto d = ged::type_distribution(edits);
    CHECK(d.total == 5);
    CHECK(d.counts.at("MISSING") == 1);
    CHECK(d.counts.at("EXTRA") == 1);
    CHECK(d.counts.at("CASE") == 1);
    CHECK(d.counts.at("SPELL") == 2);
  }
}

TEST_CASE("distributions merge component-wise") {
  auto a = dist_of({3, 1});
  const auto b = dist_of({2, 0, 5});
  a += b;
  CHECK(a.total == 11);
  CHECK(a.counts.at("cat0") == 5);
  CHECK(a.counts.at("cat1") == 1);
  CHECK(a.counts.at("cat2") == 5);
}

TEST_CASE("normalized entropy exactness") {
  CHECK(ged::normalized_entropy(dist_of({5, 5, 5, 5}), 4) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ged::normalized_entropy(dist_of({10}), 4) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ged::normalized_entropy(dist_of({2, 1, 1}), 4) ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("normalized entropy bounds and extremes") {
  ged::Rng rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const size_t k = 2 + rng.next_below(15);
    std::vector<uint64_t> counts(k, 0);
    for (size_t c = 0; c < k; ++c) counts[c] = rng.next_below(20);
    uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) continue;
    const double h = ged::normalized_entropy(dist_of(counts), k);
    CHECK(h >= 0.0);
    CHECK(h <= 1.0 + 1e-12);
  }
  // equals 1 iff uniform over k; 0 iff point mass
  CHECK(ged::normalized_entropy(dist_of({7, 7, 7}), 3) == doctest::Approx(1.0));
  CHECK(ged::normalized_entropy(dist_of({0, 9, 0}), 3) == doctest::Approx(0.0));
  CHECK(ged::normalized_entropy(dist_of({6, 7, 7}), 3) < 1.0);
}

TEST_CASE("more nonzero categories than k is rejected") {
  CHECK_THROWS(ged::normalized_entropy(dist_of({1, 1, 1}), 2));
}

TEST_CASE("mean normalized entropy") {
  const auto uniform = dist_of({5, 5, 5, 5});
  const auto point = dist_of({10});
  SUBCASE("single distribution") {
    CHECK(ged::mean_normalized_entropy({{uniform, 4}}) == doctest::Approx(1.0));
  }
  SUBCASE("two distributions average") {
    CHECK(ged::mean_normalized_entropy({{uniform, 4}, {point, 4}}) ==
          doctest::Approx(0.5));
  }
  SUBCASE("four hand-built distributions") {
    const auto d211 = dist_of({2, 1, 1});  // 0.75 at k=4
    const double expected = (1.0 + 0.0 + 0.75 + 0.75) / 4.0;
    CHECK(ged::mean_normalized_entropy(
              {{uniform, 4}, {point, 4}, {d211, 4}, {d211, 4}}) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("empty list is an error") {
    CHECK_THROWS(ged::mean_normalized_entropy({}));
  }
}

TEST_CASE("discriminator set construction") {
  auto make_pairs = [](size_t n, const std::string& prefix) {
    std::vector<ged::ParallelPair> out(n);
    for (size_t i = 0; i < n; ++i) {
      out[i].original.source_text = prefix + " good " + std::to_string(i);
      out[i].corrupted.source_text = prefix + " bad " + std::to_string(i);
    }
    return out;
  };
  SUBCASE("balanced inputs stay whole") {
    const auto set =
        ged::build_discriminator_set(make_pairs(10, "a"), make_pairs(10, "s"), 1);
    CHECK(set.size() == 20);
    size_t authentic = 0;
    for (const auto& e : set) {
      if (e.origin == ged::Origin::Authentic) ++authentic;
    }
    CHECK(authentic == 10);
  }
  SUBCASE("larger side is downsampled") {
    const auto set =
        ged::build_discriminator_set(make_pairs(100, "a"), make_pairs(10, "s"), 1);
    CHECK(set.size() == 20);
  }
  SUBCASE("same seed twice gives identical output") {
    const auto a =
        ged::build_discriminator_set(make_pairs(50, "a"), make_pairs(30, "s"), 9);
    const auto b =
        ged::build_discriminator_set(make_pairs(50, "a"), make_pairs(30, "s"), 9);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].grammatical == b[i].grammatical);
      CHECK(a[i].origin == b[i].origin);
    }
  }
  SUBCASE("empty side is an error") {
    CHECK_THROWS(ged::build_discriminator_set({}, make_pairs(5, "s"), 1));
    CHECK_THROWS(ged::build_discriminator_set(make_pairs(5, "a"), {}, 1));
  }
}
