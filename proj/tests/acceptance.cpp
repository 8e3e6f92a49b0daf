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
//
// Acceptance suite: ten independent criteria, one PASS/FAIL line each.
// Exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ged/align.hpp"
#include "ged/analyze.hpp"
#include "ged/confusion.hpp"
#include "ged/corpus_io.hpp"
#include "ged/corrupt.hpp"
#include "ged/evaluate.hpp"
#include "ged/parallel.hpp"
#include "ged/rng.hpp"
#include "ged/types.hpp"
#include "oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixture(const std::string& name) {
  return std::string(GED_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

ged::TokenSequence seq(std::vector<std::string> tokens) {
  ged::TokenSequence s;
  s.tokens = std::move(tokens);
  return s;
}

std::string labels_str(const ged::LabeledSentence& s) {
  std::string out;
  for (ged::Label l : s.labels) out += ged::label_char(l);
  return out;
}

void expect(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

// ---------------------------------------------------------------------------
// 1. Alignment oracle equivalence over all short sequence pairs.

void criterion_alignment_oracle() {
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::vector<std::vector<std::string>> sequences = {{}};
  for (size_t len = 1; len <= 6; ++len) {
    const size_t before = sequences.size();
    for (size_t s = 0; s < before; ++s) {
      if (sequences[s].size() != len - 1) continue;
      for (const auto& sym : alphabet) {
        auto next = sequences[s];
        next.push_back(sym);
        sequences.push_back(std::move(next));
      }
    }
  }
  expect(sequences.size() == 1093, "expected 1093 sequences");

  uint64_t pairs = 0;
  for (const auto& a : sequences) {
    const ged::TokenSequence ta = seq(a);
    for (const auto& b : sequences) {
      const ged::TokenSequence tb = seq(b);
      const ged::EditScript script = ged::align(ta, tb);
      const auto oracle = ged::oracle::best_alignment(a, b);
      expect(script.cost == oracle.cost, "cost mismatch");
      expect(script.ops.size() == oracle.ops.size(), "script length mismatch");
      for (size_t k = 0; k < script.ops.size(); ++k) {
        expect(static_cast<int>(script.ops[k].kind) ==
                   static_cast<int>(oracle.ops[k]),
               "tie-break script mismatch");
      }
      const auto labeled = ged::label_from_alignment(script, tb);
      const auto oracle_labels =
          ged::oracle::labels_from_alignment(oracle, b.size());
      expect(labels_str(labeled) ==
                 std::string(oracle_labels.begin(), oracle_labels.end()),
             "label mismatch");
      ++pairs;
    }
  }
  expect(pairs == 1093ull * 1093ull, "pair count mismatch");
}

// ---------------------------------------------------------------------------
// 2. Labeling rule spot checks plus identity pairs.

void criterion_labeling_spot_checks() {
  auto labels_of = [](const ged::TokenSequence& o, const ged::TokenSequence& c) {
    return labels_str(ged::label_from_alignment(ged::align(o, c), c));
  };
  expect(labels_of(seq({"I", "have", "a", "dog"}),
                   seq({"I", "has", "a", "dog"})) == "cicc",
         "substitution example");
  expect(labels_of(seq({"she", "is", "very", "nice"}),
                   seq({"she", "is", "nice"})) == "cci",
         "deletion-gap example");
  expect(labels_of(seq({"I", "sat"}), seq({"I", "quickly", "sat"})) == "cic",
         "insertion example");

  ged::Rng rng(41);
  for (int iter = 0; iter < 1000; ++iter) {
    ged::TokenSequence s;
    const size_t len = 1 + rng.next_below(30);
    for (size_t t = 0; t < len; ++t) {
      s.tokens.push_back("w" + std::to_string(rng.next_below(50)));
    }
    const std::string labels = labels_of(s, s);
    expect(labels == std::string(len, 'c'), "identity pair not all-c");
  }
}

// ---------------------------------------------------------------------------
// 3. Corrupt -> label consistency under substitution-only noise.

void criterion_corrupt_label_consistency() {
  // Token families four letters apart with a single distance-1 dictionary
  // variant each, so every replacement comes from outside the sentence.
  std::vector<ged::DictEntry> dict;
  for (char c = 'a'; c <= 'm'; ++c) {
    dict.push_back({std::string(4, c), 1});
    dict.push_back({std::string(3, c) + "z", 1});
  }
  ged::ConfusionIndex index(std::move(dict), 2);

  ged::CorruptionConfig config;
  config.seed = 77;
  config.p_word = 0.2;
  config.p_char = 0.0;
  config.word_op_weights.weights = {1.0, 0.0, 0.0, 0.0};  // replace only

  std::vector<ged::TokenSequence> corpus;
  ged::Rng rng(55);
  for (int i = 0; i < 10000; ++i) {
    ged::TokenSequence s;
    const size_t len = 3 + rng.next_below(15);
    for (size_t t = 0; t < len; ++t) {
      s.tokens.push_back(std::string(4, static_cast<char>('a' + rng.next_below(13))));
    }
    corpus.push_back(std::move(s));
  }
  const auto pairs = ged::corrupt_corpus(corpus, config, index);
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto labeled = ged::label_pair(pairs[i]);
    const auto& a = corpus[i].tokens;
    const auto& b = pairs[i].corrupted.tokens;
    expect(a.size() == b.size(), "substitution-only changed the length");
    for (size_t t = 0; t < a.size(); ++t) {
      const bool corrupted_here = a[t] != b[t];
      const bool labeled_i = labeled.labels[t] == ged::Label::Incorrect;
      expect(corrupted_here == labeled_i, "label set != corrupted set");
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Metric exactness and PR-curve monotonicity.

std::pair<std::vector<ged::LabeledSentence>, ged::PredictionFile> eval_case(
    const std::vector<int>& gold_i, const std::vector<double>& probs) {
  ged::LabeledSentence gold;
  ged::PredictionSentence pred;
  for (size_t t = 0; t < probs.size(); ++t) {
    gold.tokens.push_back("t" + std::to_string(t));
    pred.tokens.push_back("t" + std::to_string(t));
    bool is_i = false;
    for (int g : gold_i) {
      if (g == static_cast<int>(t)) is_i = true;
    }
    gold.labels.push_back(is_i ? ged::Label::Incorrect : ged::Label::Correct);
    pred.probabilities.push_back(probs[t]);
  }
  ged::PredictionFile file;
  file.sentences.push_back(std::move(pred));
  return {{gold}, file};
}

void criterion_metric_exactness() {
  {
    // TP=1 FP=0 FN=1 -> P=1, R=0.5, F0.5=0.833333...
    std::vector<double> probs(10, 0.0);
    probs[2] = 1.0;
    const auto [gold, pred] = eval_case({2, 5}, probs);
    const auto r = ged::score(gold, pred, 0.5);
    expect(r.true_positives == 1 && r.false_positives == 0 &&
               r.false_negatives == 1,
           "case 1 counts");
    expect(std::fabs(r.f_half - 5.0 / 6.0) < 1e-9, "case 1 F0.5");
  }
  {
    // TP=3 FP=1 FN=2 -> P=0.75, R=0.6, F0.5=0.714285...
    const auto [gold, pred] = eval_case({0, 1, 2, 3, 4}, {1, 1, 1, 0, 0, 1, 0});
    const auto r = ged::score(gold, pred, 0.5);
    expect(r.true_positives == 3 && r.false_positives == 1 &&
               r.false_negatives == 2,
           "case 2 counts");
    expect(std::fabs(r.f_half - 5.0 / 7.0) < 1e-9, "case 2 F0.5");
  }

  ged::Rng rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    const size_t n = 1 + rng.next_below(50);
    std::vector<int> gold_i;
    std::vector<double> probs;
    for (size_t t = 0; t < n; ++t) {
      if (rng.bernoulli(0.3)) gold_i.push_back(static_cast<int>(t));
      probs.push_back(static_cast<double>(rng.next_below(21)) / 20.0);
    }
    const auto [gold, pred] = eval_case(gold_i, probs);
    const auto curve = ged::pr_curve(gold, pred);
    for (size_t k = 1; k < curve.points.size(); ++k) {
      expect(curve.points[k].threshold > curve.points[k - 1].threshold,
             "thresholds not strictly increasing");
      expect(curve.points[k].recall <= curve.points[k - 1].recall + 1e-15,
             "recall not non-increasing");
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Confusion index completeness and speedup on a 50k-word dictionary.

void criterion_confusion_completeness(std::string& note) {
  ged::Rng rng(71);
  std::vector<std::string> words;
  while (words.size() < 50000) {
    const size_t len = 4 + rng.next_below(7);
    std::string w;
    for (size_t i = 0; i < len; ++i) {
      w += static_cast<char>('a' + rng.next_below(26));
    }
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  expect(words.size() >= 50000 - 100, "dictionary too small");

  std::vector<ged::DictEntry> entries;
  entries.reserve(words.size());
  for (const auto& w : words) entries.push_back({w, 1});
  ged::ConfusionIndex index(std::move(entries), 2);

  std::vector<std::string> queries;
  for (int q = 0; q < 100; ++q) {
    std::string query = words[rng.next_below(words.size())];
    if (q % 2 == 1) {
      query[rng.next_below(query.size())] =
          static_cast<char>('a' + rng.next_below(26));
    }
    queries.push_back(std::move(query));
  }

  std::vector<std::vector<std::string>> indexed(queries.size());
  const auto t0 = Clock::now();
  for (size_t q = 0; q < queries.size(); ++q) {
    indexed[q] = index.lookup(queries[q]);
  }
  const double lookup_time = seconds_since(t0);

  const auto t1 = Clock::now();
  for (size_t q = 0; q < queries.size(); ++q) {
    auto expected = ged::oracle::scan_confusions(words, queries[q], 2);
    auto got = indexed[q];
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    expect(got == expected, "lookup differs from brute-force scan");
  }
  const double scan_time = seconds_since(t1);

  const double speedup = scan_time / std::max(lookup_time, 1e-9);
  char buf[128];
  snprintf(buf, sizeof(buf), "speedup %.0fx (lookup %.4fs, scan %.2fs)",
           speedup, lookup_time, scan_time);
  note = buf;
  expect(speedup >= 100.0, "indexed lookup less than 100x faster than scan");
}

// ---------------------------------------------------------------------------
// 6. Entropy exactness.

void criterion_entropy_exactness() {
  auto dist_of = [](std::vector<uint64_t> counts) {
    ged::TypeDistribution d;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0) d.add("cat" + std::to_string(i), counts[i]);
    }
    return d;
  };
  expect(std::fabs(ged::normalized_entropy(dist_of({5, 5, 5, 5}), 4) - 1.0) <
             1e-9,
         "uniform entropy");
  expect(std::fabs(ged::normalized_entropy(dist_of({10}), 4) - 0.0) < 1e-9,
         "point-mass entropy");
  expect(std::fabs(ged::normalized_entropy(dist_of({2, 1, 1}), 4) - 0.75) <
             1e-9,
         "counts [2,1,1] at k=4");
}

// ---------------------------------------------------------------------------
// 7. CLI determinism across runs and thread counts.

int run_cli(const std::string& args) {
  const char* cli = std::getenv("GED_CLI");
  expect(cli != nullptr, "GED_CLI not set");
  const std::string cmd = std::string(cli) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string manifest_sans_timestamp(const std::string& output_path) {
  std::string text = slurp(output_path + ".manifest.json");
  const size_t pos = text.find("\"timestamp_unix\"");
  expect(pos != std::string::npos, "manifest has no timestamp");
  const size_t end = text.find_first_of(",}\n", pos);
  text.erase(pos, end - pos);
  return text;
}

void criterion_cli_determinism() {
  std::string tmpl = "/tmp/gedacc_XXXXXX";
  char* dir_c = ::mkdtemp(tmpl.data());
  expect(dir_c != nullptr, "mkdtemp failed");
  const std::string dir(dir_c);
  auto path = [&](const std::string& name) { return dir + "/" + name; };

  std::string corpus;
  ged::Rng rng(83);
  const std::vector<std::string> vocab = {"aaaa", "bbbb", "cccc", "dddd",
                                          "eeee", "ffff"};
  for (int i = 0; i < 400; ++i) {
    std::string line;
    const size_t len = 4 + rng.next_below(12);
    for (size_t t = 0; t < len; ++t) {
      if (t > 0) line += ' ';
      line += vocab[rng.next_below(vocab.size())];
    }
    corpus += line + "\n";
  }
  write_file(path("clean.txt"), corpus);
  write_file(path("dict.txt"),
             "aaaa\naaaz\nbbbb\nbbbz\ncccc\ncccz\ndddd\ndddz\neeee\neeez\n"
             "ffff\nfffz\n");

  // corrupt: two runs at --threads 1, one at --threads 4
  const std::string corrupt_common = "corrupt --in " + path("clean.txt") +
                                     " --dict " + path("dict.txt") +
                                     " --p-word 0.3 ";
  const std::string corrupt_base = corrupt_common + "--seed 13 ";
  expect(run_cli(corrupt_base + "--out " + path("p1.jsonl") + " --threads 1") == 0,
         "corrupt run 1 failed");
  expect(run_cli(corrupt_base + "--out " + path("p2.jsonl") + " --threads 1") == 0,
         "corrupt run 2 failed");
  expect(run_cli(corrupt_base + "--out " + path("p4.jsonl") + " --threads 4") == 0,
         "corrupt run 3 failed");
  const std::string pairs_bytes = slurp(path("p1.jsonl"));
  expect(pairs_bytes == slurp(path("p2.jsonl")), "corrupt not run-stable");
  expect(pairs_bytes == slurp(path("p4.jsonl")), "corrupt not thread-stable");

  // manifests: identical runs in sibling directories with the same relative
  // paths agree byte-for-byte except for the timestamp
  for (const std::string& sub : {"r1", "r2"}) {
    expect(std::system(("mkdir -p " + path(sub)).c_str()) == 0, "mkdir failed");
    write_file(path(sub + "/clean.txt"), corpus);
    write_file(path(sub + "/dict.txt"), slurp(path("dict.txt")));
    const char* cli = std::getenv("GED_CLI");
    const std::string cmd = "cd " + path(sub) + " && " + cli +
                            " corrupt --in clean.txt --dict dict.txt --seed 13"
                            " --p-word 0.3 --threads 1 --out pairs.jsonl"
                            " >/dev/null 2>&1";
    expect(std::system(cmd.c_str()) == 0, "corrupt in " + sub + " failed");
  }
  expect(slurp(path("r1/pairs.jsonl")) == slurp(path("r2/pairs.jsonl")),
         "corrupt not run-stable across directories");
  expect(manifest_sans_timestamp(path("r1/pairs.jsonl")) ==
             manifest_sans_timestamp(path("r2/pairs.jsonl")),
         "corrupt manifest not run-stable");

  // sample: two runs, fixed seed
  const std::string sample_base =
      "sample --in " + path("clean.txt") + " --n 50 --seed 3 ";
  expect(run_cli(sample_base + "--out " + path("s1.txt")) == 0, "sample 1 failed");
  expect(run_cli(sample_base + "--out " + path("s2.txt")) == 0, "sample 2 failed");
  expect(slurp(path("s1.txt")) == slurp(path("s2.txt")), "sample not run-stable");

  // discriminator-data: two runs over two corrupt outputs
  expect(run_cli(corrupt_common + "--seed 14 --out " + path("synth.jsonl")) == 0,
         "corrupt for synthetic side failed");
  const std::string disc_base = "discriminator-data --authentic " +
                                path("p1.jsonl") + " --synthetic " +
                                path("synth.jsonl") + " --seed 5 ";
  expect(run_cli(disc_base + "--out " + path("d1.tsv")) == 0, "disc 1 failed");
  expect(run_cli(disc_base + "--out " + path("d2.tsv")) == 0, "disc 2 failed");
  expect(slurp(path("d1.tsv")) == slurp(path("d2.tsv")),
         "discriminator-data not run-stable");
}

// ---------------------------------------------------------------------------
// 8. Format round trips.

void criterion_format_round_trips() {
  // Multi-GED TSV: fixture bytes -> parse -> write -> identical bytes
  const std::string tsv_bytes = slurp(fixture("gold.tsv"));
  {
    std::istringstream in(tsv_bytes);
    const auto sentences = ged::parse_multiged_tsv(in);
    std::ostringstream out;
    ged::write_multiged_tsv(sentences, out);
    expect(out.str() == tsv_bytes, "TSV round trip not byte-exact");
  }

  // M2: fixture bytes -> parse -> write -> identical bytes
  const std::string m2_bytes = slurp(fixture("roundtrip.m2"));
  {
    std::istringstream in(m2_bytes);
    const auto records = ged::parse_m2(in);
    std::ostringstream out;
    ged::write_m2(records, out);
    expect(out.str() == m2_bytes, "M2 round trip not byte-exact");
  }

  // labels from the first fixture record
  const auto records = ged::read_m2(fixture("sample.m2"));
  expect(!records.empty(), "fixture has no records");
  expect(labels_str(ged::m2_to_labels(records[0], 0)) == "cic",
         "fixture record labels");
}

// ---------------------------------------------------------------------------
// 9. Corruption rate concentration.

void criterion_corruption_rate(std::string& note) {
  std::vector<ged::DictEntry> dict;
  for (char c = 'a'; c <= 'z'; ++c) {
    dict.push_back({std::string(4, c), 1});
    dict.push_back({std::string(3, c) + "z", 1});
  }
  ged::ConfusionIndex index(std::move(dict), 2);

  ged::CorruptionConfig config;
  config.seed = 101;
  config.p_word = 0.15;
  config.p_char = 0.0;
  config.word_op_weights.weights = {1.0, 0.0, 0.0, 0.0};

  std::vector<ged::TokenSequence> corpus;
  ged::Rng rng(103);
  size_t total_tokens = 0;
  while (total_tokens < 20000) {
    ged::TokenSequence s;
    const size_t len = 5 + rng.next_below(20);
    for (size_t t = 0; t < len; ++t) {
      s.tokens.push_back(std::string(4, static_cast<char>('a' + rng.next_below(13))));
    }
    total_tokens += len;
    corpus.push_back(std::move(s));
  }
  const auto pairs = ged::corrupt_corpus(corpus, config, index);
  size_t changed = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t t = 0; t < corpus[i].tokens.size(); ++t) {
      if (corpus[i].tokens[t] != pairs[i].corrupted.tokens[t]) ++changed;
    }
  }
  const double rate = static_cast<double>(changed) / static_cast<double>(total_tokens);
  char buf[96];
  snprintf(buf, sizeof(buf), "observed rate %.4f over %zu tokens", rate,
           total_tokens);
  note = buf;
  expect(rate >= 0.13 && rate <= 0.17, "rate outside [0.13, 0.17]");
}

// ---------------------------------------------------------------------------
// 10. Labeling throughput on 100k 20-token pairs.

void criterion_throughput(std::string& note, bool& soft_miss) {
  ged::Rng rng(113);
  std::vector<ged::ParallelPair> pairs(100000);
  for (auto& pair : pairs) {
    std::vector<std::string> orig(20);
    for (auto& tok : orig) tok = "w" + std::to_string(rng.next_below(200));
    std::vector<std::string> corr = orig;
    const size_t errors = rng.next_below(4);
    for (size_t e = 0; e < errors && !corr.empty(); ++e) {
      const size_t pos = rng.next_below(corr.size());
      switch (rng.next_below(3)) {
        case 0: corr[pos] = "x" + std::to_string(rng.next_below(200)); break;
        case 1: corr.erase(corr.begin() + pos); break;
        default:
          corr.insert(corr.begin() + pos, "y" + std::to_string(rng.next_below(200)));
          break;
      }
    }
    pair.original = seq(std::move(orig));
    pair.corrupted = seq(std::move(corr));
  }

  std::vector<std::string> labels(pairs.size());
  const auto t0 = Clock::now();
  ged::parallel_for(pairs.size(), 0, [&](size_t i) {
    labels[i] = labels_str(ged::label_pair(pairs[i]));
  });
  const double elapsed = seconds_since(t0);

  for (size_t i = 0; i < pairs.size(); ++i) {
    expect(labels[i].size() == pairs[i].corrupted.size(), "label shape");
  }
  char buf[96];
  snprintf(buf, sizeof(buf), "100000 pairs labeled in %.2fs", elapsed);
  note = buf;
  soft_miss = elapsed >= 60.0;
  expect(elapsed < 120.0, "throughput over twice the budget");
}

struct Criterion {
  std::string name;
  std::function<void(std::string&, bool&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"alignment oracle equivalence",
       [](std::string&, bool&) { criterion_alignment_oracle(); }},
      {"labeling rule spot checks",
       [](std::string&, bool&) { criterion_labeling_spot_checks(); }},
      {"corrupt-label consistency",
       [](std::string&, bool&) { criterion_corrupt_label_consistency(); }},
      {"metric exactness and PR monotonicity",
       [](std::string&, bool&) { criterion_metric_exactness(); }},
      {"confusion index completeness and speedup",
       [](std::string& note, bool&) { criterion_confusion_completeness(note); }},
      {"entropy exactness",
       [](std::string&, bool&) { criterion_entropy_exactness(); }},
      {"CLI determinism", [](std::string&, bool&) { criterion_cli_determinism(); }},
      {"format round trips",
       [](std::string&, bool&) { criterion_format_round_trips(); }},
      {"corruption rate concentration",
       [](std::string& note, bool&) { criterion_corruption_rate(note); }},
      {"labeling throughput",
       [](std::string& note, bool& soft) { criterion_throughput(note, soft); }},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool soft_miss = false;
    const auto start = Clock::now();
    try {
      criteria[i].run(note, soft_miss);
      std::cout << "PASS criterion " << i + 1 << ": " << criteria[i].name;
      if (!note.empty()) std::cout << " (" << note << ")";
      if (soft_miss) std::cout << " [over the 60s soft target]";
      std::cout << " [" << std::fixed;
      std::cout.precision(1);
      std::cout << seconds_since(start) << "s]\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << i + 1 << ": " << criteria[i].name
                << " (" << e.what() << ")";
      if (!note.empty()) std::cout << " (" << note << ")";
      std::cout << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}
