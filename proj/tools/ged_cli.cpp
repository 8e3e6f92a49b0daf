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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ged/align.hpp"
#include "ged/analyze.hpp"
#include "ged/confusion.hpp"
#include "ged/corpus_io.hpp"
#include "ged/corrupt.hpp"
#include "ged/evaluate.hpp"
#include "ged/manifest.hpp"
#include "ged/parallel.hpp"
#include "ged/rng.hpp"
#include "ged/sample.hpp"
#include "ged/tokenize.hpp"
#include "ged/types.hpp"
#include "ged/unicode.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

using nlohmann::json;

// ---------------------------------------------------------------------------
// Shared option plumbing

struct CommonOptions {
  std::string config_path;
  unsigned threads = 0;  // 0 = available parallelism
};

unsigned resolve_thread_count(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GED_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // let parallel_for pick hardware concurrency
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ged::IoError("cannot open config", path);
  json j;
  in >> j;
  return j;
}

// Flags override config fields: a config value is applied only when the
// flag was not given on the command line.
template <typename T>
void config_default(const CLI::App& app, const json& config,
                    const std::string& flag, const std::string& key, T& value) {
  const CLI::Option* opt = app.get_option_no_throw(flag);
  if (opt != nullptr && opt->count() > 0) return;
  if (config.contains(key)) value = config[key].get<T>();
}

ged::TokenizerScheme make_scheme(const std::string& name,
                                 const std::string& language) {
  const auto kind = ged::tokenizer_kind_from_name(name);
  if (!kind) {
    throw std::invalid_argument(
        "unknown tokenizer '" + name +
        "' (expected whitespace|unicode-words|per-character|pretokenized)");
  }
  ged::TokenizerScheme scheme;
  scheme.kind = *kind;
  if (!language.empty()) scheme.language = language;
  return scheme;
}

ged::OpWeights parse_weights(const std::string& spec) {
  ged::OpWeights w{{0.0, 0.0, 0.0, 0.0}};
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(start, comma - start);
    const size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("weight item '" + item + "' is not name=value");
    }
    const std::string name = item.substr(0, eq);
    const double value = std::stod(item.substr(eq + 1));
    if (name == "replace") w[ged::NoiseOp::Replace] = value;
    else if (name == "delete") w[ged::NoiseOp::Delete] = value;
    else if (name == "insert") w[ged::NoiseOp::Insert] = value;
    else if (name == "swap") w[ged::NoiseOp::Swap] = value;
    else throw std::invalid_argument("unknown operation '" + name + "'");
    start = comma + 1;
  }
  return w;
}

std::string format_double(double v) {
  char buf[64];
  snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

json report_to_json(const ged::EvalReport& r) {
  json j;
  j["true_positives"] = r.true_positives;
  j["false_positives"] = r.false_positives;
  j["false_negatives"] = r.false_negatives;
  j["true_negatives"] = r.true_negatives;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f_half"] = r.f_half;
  j["threshold"] = r.threshold;
  j["notes"] = "micro-averaged over all tokens, punctuation included";
  return j;
}

std::vector<ged::TokenSequence> tokenize_lines(
    const std::vector<std::string>& lines, const ged::TokenizerScheme& scheme) {
  std::vector<ged::TokenSequence> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(ged::tokenize(line, scheme));
  return out;
}

// ---------------------------------------------------------------------------
// convert: M2 -> Multi-GED TSV

struct ConvertArgs {
  std::string m2_path;
  std::string out_path;
  int annotator = 0;
};

int run_convert(const ConvertArgs& args) {
  const auto records = ged::read_m2(args.m2_path);
  std::vector<ged::LabeledSentence> sentences;
  sentences.reserve(records.size());
  for (const auto& rec : records) {
    sentences.push_back(ged::m2_to_labels(rec, args.annotator));
  }
  ged::write_multiged_tsv(sentences, args.out_path);

  ged::RunManifest manifest("convert");
  manifest.set_config({{"m2", args.m2_path},
                       {"out", args.out_path},
                       {"annotator", args.annotator}});
  manifest.add_input(args.m2_path);
  manifest.add_output(args.out_path);
  manifest.add_counter("sentences", sentences.size());
  manifest.write_beside(args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// label: parallel corpus -> Multi-GED TSV (+ optional edit log)

struct LabelArgs {
  std::string original_path;
  std::string corrupted_path;
  std::string tsv_path;
  std::string pairs_path;
  std::string out_path;
  std::string edits_path;
  std::string tokenizer = "whitespace";
  std::string language;
  unsigned threads = 0;
};

int run_label(const LabelArgs& args) {
  const int sources = (!args.original_path.empty() ? 1 : 0) +
                      (!args.tsv_path.empty() ? 1 : 0) +
                      (!args.pairs_path.empty() ? 1 : 0);
  if (sources != 1) {
    throw std::invalid_argument(
        "exactly one of --original/--corrupted, --tsv, --pairs is required");
  }

  std::vector<ged::ParallelPair> pairs;
  std::vector<std::string> inputs;
  if (!args.original_path.empty()) {
    if (args.corrupted_path.empty()) {
      throw std::invalid_argument("--original requires --corrupted");
    }
    pairs = ged::read_parallel(args.original_path, args.corrupted_path);
    inputs = {args.original_path, args.corrupted_path};
  } else if (!args.tsv_path.empty()) {
    pairs = ged::read_parallel_tsv(args.tsv_path);
    inputs = {args.tsv_path};
  } else {
    pairs = ged::read_pairs_jsonl(args.pairs_path);
    inputs = {args.pairs_path};
  }

  const auto scheme = make_scheme(args.tokenizer, args.language);
  constexpr size_t kMaxTokens = 512;
  constexpr double kMaxLengthRatio = 4.0;

  struct Row {
    ged::LabeledSentence labeled;
    std::vector<ged::Edit> edits;
    bool skipped = false;
  };
  std::vector<Row> rows(pairs.size());
  const bool want_edits = !args.edits_path.empty();

  ged::parallel_for(pairs.size(), resolve_thread_count(args.threads), [&](size_t i) {
    ged::ParallelPair& pair = pairs[i];
    Row& row = rows[i];
    if (pair.degenerate) {
      row.skipped = true;
      return;
    }
    pair.original = ged::tokenize(pair.original.source_text.value_or(""), scheme);
    pair.corrupted = ged::tokenize(pair.corrupted.source_text.value_or(""), scheme);
    const size_t m = pair.original.size();
    const size_t n = pair.corrupted.size();
    if (m == 0 && n == 0) {
      row.skipped = true;
      return;
    }
    if (m > kMaxTokens || n > kMaxTokens) {
      row.skipped = true;
      return;
    }
    if (std::min(m, n) > 0 &&
        static_cast<double>(std::max(m, n)) / static_cast<double>(std::min(m, n)) >
            kMaxLengthRatio) {
      row.skipped = true;
      return;
    }
    const ged::EditScript script = ged::align(pair.original, pair.corrupted);
    row.labeled = ged::label_from_alignment(script, pair.corrupted);
    if (want_edits) {
      for (const ged::SpanEdit& se :
           ged::extract_edits(script, pair.original, pair.corrupted)) {
        ged::Edit edit;
        edit.kind = se.kind;
        edit.original.assign(pair.original.tokens.begin() + se.original_begin,
                             pair.original.tokens.begin() + se.original_end);
        edit.corrupted.assign(pair.corrupted.tokens.begin() + se.corrupted_begin,
                              pair.corrupted.tokens.begin() + se.corrupted_end);
        row.edits.push_back(std::move(edit));
      }
    }
  });

  std::vector<ged::LabeledSentence> sentences;
  std::vector<ged::Edit> all_edits;
  uint64_t skipped = 0;
  for (Row& row : rows) {
    if (row.skipped) {
      ++skipped;
      continue;
    }
    sentences.push_back(std::move(row.labeled));
    for (auto& e : row.edits) all_edits.push_back(std::move(e));
  }
  ged::write_multiged_tsv(sentences, args.out_path);
  if (want_edits) ged::write_edits_jsonl(all_edits, args.edits_path);

  ged::RunManifest manifest("label");
  manifest.set_config({{"tokenizer", args.tokenizer},
                       {"language", args.language},
                       {"out", args.out_path},
                       {"emit_edits", args.edits_path}});
  for (const auto& p : inputs) manifest.add_input(p);
  manifest.add_output(args.out_path);
  if (want_edits) manifest.add_output(args.edits_path);
  manifest.add_counter("pairs_labeled", sentences.size());
  manifest.add_counter("pairs_skipped", skipped);
  manifest.write_beside(args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// corrupt: clean sentences -> synthetic-pair JSONL

struct CorruptArgs {
  std::string in_path;
  std::string dict_path;
  std::string out_path;
  std::string tokenizer = "whitespace";
  std::string language;
  std::string word_weights;
  std::string char_weights;
  ged::CorruptionConfig config;
  unsigned threads = 0;
};

int run_corrupt(const CorruptArgs& args) {
  ged::CorruptionConfig config = args.config;
  if (!args.word_weights.empty()) {
    config.word_op_weights = parse_weights(args.word_weights);
  }
  if (!args.char_weights.empty()) {
    config.char_op_weights = parse_weights(args.char_weights);
  }
  config.validate();

  const auto index = ged::ConfusionIndex::from_file(args.dict_path,
                                                    config.max_distance);
  const auto scheme = make_scheme(args.tokenizer, args.language);
  auto sentences = tokenize_lines(ged::read_lines(args.in_path), scheme);
  auto pairs = ged::corrupt_corpus(sentences, config, index,
                                   resolve_thread_count(args.threads));

  uint64_t degenerate = 0;
  uint64_t tokens_in = 0;
  uint64_t tokens_changed = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].degenerate) ++degenerate;
    tokens_in += sentences[i].size();
    const auto& a = sentences[i].tokens;
    const auto& b = pairs[i].corrupted.tokens;
    for (size_t t = 0; t < a.size(); ++t) {
      if (t >= b.size() || a[t] != b[t]) ++tokens_changed;
    }
  }
  ged::write_pairs_jsonl(pairs, args.out_path);

  ged::RunManifest manifest("corrupt");
  manifest.set_config({{"in", args.in_path},
                       {"dict", args.dict_path},
                       {"out", args.out_path},
                       {"seed", config.seed},
                       {"p_word", config.p_word},
                       {"p_char", config.p_char},
                       {"max_distance", config.max_distance},
                       {"per_sentence_rate", config.per_sentence_rate},
                       {"word_op_weights", config.word_op_weights.weights},
                       {"char_op_weights", config.char_op_weights.weights},
                       {"tokenizer", args.tokenizer}});
  manifest.add_input(args.in_path);
  manifest.add_input(args.dict_path);
  manifest.add_output(args.out_path);
  manifest.add_counter("sentences", pairs.size());
  manifest.add_counter("degenerate", degenerate);
  manifest.add_counter("tokens_in", tokens_in);
  manifest.add_counter("tokens_corrupted", tokens_changed);
  manifest.write_beside(args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// confusion build/query

struct ConfusionArgs {
  std::string dict_path;
  size_t max_distance = 2;
  std::string word;   // query only
  size_t limit = 20;  // query only
};

int run_confusion_build(const ConfusionArgs& args) {
  const auto index = ged::ConfusionIndex::from_file(args.dict_path,
                                                    args.max_distance);
  json j;
  j["dictionary"] = args.dict_path;
  j["words"] = index.size();
  j["max_distance"] = index.max_distance();
  j["total_frequency"] = index.total_frequency();
  j["alphabet_size"] = index.alphabet().size();
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_confusion_query(const ConfusionArgs& args) {
  const auto index = ged::ConfusionIndex::from_file(args.dict_path,
                                                    args.max_distance);
  auto candidates = index.lookup(args.word);
  if (candidates.size() > args.limit) candidates.resize(args.limit);
  json j;
  j["word"] = args.word;
  j["confusion_set"] = candidates;
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sample

struct SampleArgs {
  std::string in_path;
  std::string out_path;
  std::string pred_path;
  std::string tokenizer = "whitespace";
  size_t n = 0;
  uint64_t seed = 0;
  size_t min_tokens = 3;
  size_t max_tokens = 128;
  double filter_threshold = 0.5;
};

int run_sample(const SampleArgs& args) {
  const auto corpus = ged::read_lines(args.in_path);
  ged::PredictionFile predictions;
  ged::SampleOptions options;
  options.n = args.n;
  options.seed = args.seed;
  options.min_tokens = args.min_tokens;
  options.max_tokens = args.max_tokens;
  options.filter_threshold = args.filter_threshold;
  options.tokenizer = make_scheme(args.tokenizer, "");
  if (!args.pred_path.empty()) {
    predictions = ged::read_predictions(args.pred_path);
    options.filter_predictions = &predictions;
  }
  const auto result = ged::sample_clean(corpus, options);
  ged::write_lines(result.sentences, args.out_path);
  if (result.underfull) {
    std::cerr << "warning: only " << result.sentences.size()
              << " sentences survived filtering (requested " << args.n << ")\n";
  }

  ged::RunManifest manifest("sample");
  manifest.set_config({{"in", args.in_path},
                       {"out", args.out_path},
                       {"n", args.n},
                       {"seed", args.seed},
                       {"min_tokens", args.min_tokens},
                       {"max_tokens", args.max_tokens},
                       {"filter_pred", args.pred_path},
                       {"filter_threshold", args.filter_threshold},
                       {"tokenizer", args.tokenizer}});
  manifest.add_input(args.in_path);
  if (!args.pred_path.empty()) manifest.add_input(args.pred_path);
  manifest.add_output(args.out_path);
  manifest.add_counter("sampled", result.sentences.size());
  manifest.add_counter("dropped_length", result.dropped_length);
  manifest.add_counter("dropped_duplicate", result.dropped_duplicate);
  manifest.add_counter("dropped_predicted_error", result.dropped_predicted_error);
  manifest.add_counter("underfull", result.underfull ? 1 : 0);
  manifest.write_beside(args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate / pr-curve

struct EvaluateArgs {
  std::string gold_path;
  std::string pred_path;
  double threshold = 0.5;
};

int run_evaluate(const EvaluateArgs& args) {
  const auto gold = ged::read_multiged_tsv(args.gold_path);
  const auto pred = ged::read_predictions(args.pred_path);
  const auto report = ged::score(gold, pred, args.threshold);
  std::cout << report_to_json(report).dump(2) << '\n';
  return kExitOk;
}

struct PrCurveArgs {
  std::string gold_path;
  std::string pred_path;
  std::string out_path;
  std::string svg_path;
};

void write_curve_csv(const ged::PrCurve& curve, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ged::IoError("cannot open for writing", path);
  out << "threshold,precision,recall\n";
  for (const auto& pt : curve.points) {
    out << format_double(pt.threshold) << ',' << format_double(pt.precision)
        << ',' << format_double(pt.recall) << '\n';
  }
  if (!out) throw ged::IoError("write failed", path);
}

void write_curve_svg(const ged::PrCurve& curve, const std::string& path) {
  constexpr int kSize = 480;
  constexpr int kMargin = 40;
  const double span = kSize - 2 * kMargin;
  auto x_of = [&](double recall) { return kMargin + recall * span; };
  auto y_of = [&](double precision) { return kSize - kMargin - precision * span; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ged::IoError("cannot open for writing", path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\""
      << kSize - kMargin << "\" y2=\"" << kSize - kMargin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kSize - kMargin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 8
      << "\" text-anchor=\"middle\" font-size=\"14\">recall</text>\n";
  out << "<text x=\"14\" y=\"" << kSize / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 14 "
      << kSize / 2 << ")\">precision</text>\n";

  // Points sorted by recall so the polyline runs left to right.
  std::vector<std::pair<double, double>> pts;
  for (const auto& pt : curve.points) pts.emplace_back(pt.recall, pt.precision);
  std::sort(pts.begin(), pts.end());
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (const auto& [r, p] : pts) {
    out << format_double(x_of(r)) << ',' << format_double(y_of(p)) << ' ';
  }
  out << "\"/>\n</svg>\n";
  if (!out) throw ged::IoError("write failed", path);
}

int run_pr_curve(const PrCurveArgs& args) {
  const auto gold = ged::read_multiged_tsv(args.gold_path);
  const auto pred = ged::read_predictions(args.pred_path);
  const auto curve = ged::pr_curve(gold, pred);
  write_curve_csv(curve, args.out_path);
  if (!args.svg_path.empty()) write_curve_svg(curve, args.svg_path);

  const auto [threshold, f_half] = ged::best_f_half(curve);
  json summary;
  summary["points"] = curve.points.size();
  summary["best_threshold"] = threshold;
  summary["best_f_half"] = f_half;
  std::cout << summary.dump(2) << '\n';

  ged::RunManifest manifest("pr-curve");
  manifest.set_config({{"gold", args.gold_path},
                       {"pred", args.pred_path},
                       {"out", args.out_path},
                       {"svg", args.svg_path}});
  manifest.add_input(args.gold_path);
  manifest.add_input(args.pred_path);
  manifest.add_output(args.out_path);
  if (!args.svg_path.empty()) manifest.add_output(args.svg_path);
  manifest.write_beside(args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze edits / entropy

struct AnalyzeEditsArgs {
  std::string in_path;
  std::string out_path;
};

int run_analyze_edits(const AnalyzeEditsArgs& args) {
  const auto edits = ged::read_edits_jsonl(args.in_path);
  const auto dist = ged::type_distribution(edits);
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw ged::IoError("cannot open for writing", args.out_path);
  out << ged::distribution_to_json(dist).dump(2) << '\n';
  out.close();

  ged::RunManifest manifest("analyze-edits");
  manifest.set_config({{"in", args.in_path}, {"out", args.out_path}});
  manifest.add_input(args.in_path);
  manifest.add_output(args.out_path);
  manifest.add_counter("edits", dist.total);
  manifest.write_beside(args.out_path);
  return kExitOk;
}

struct AnalyzeEntropyArgs {
  std::string dist_path;
  std::string clusters_path;
  std::vector<size_t> k_values;
};

int run_analyze_entropy(const AnalyzeEntropyArgs& args) {
  if (args.dist_path.empty() == args.clusters_path.empty()) {
    throw std::invalid_argument("exactly one of --in or --clusters is required");
  }
  ged::TypeDistribution dist;
  if (!args.dist_path.empty()) {
    std::ifstream in(args.dist_path);
    if (!in) throw ged::IoError("cannot open distribution", args.dist_path);
    json j;
    in >> j;
    dist = ged::distribution_from_json(j);
  } else {
    dist = ged::read_clusters_tsv(args.clusters_path);
  }
  std::vector<size_t> ks = args.k_values;
  if (ks.empty()) ks.push_back(ged::kErrorTypeCount);

  std::vector<std::pair<ged::TypeDistribution, size_t>> per_k;
  json values = json::array();
  for (size_t k : ks) {
    const double h = ged::normalized_entropy(dist, k);
    values.push_back({{"k", k}, {"normalized_entropy", h}});
    per_k.emplace_back(dist, k);
  }
  json j;
  j["values"] = values;
  j["mean_normalized_entropy"] = ged::mean_normalized_entropy(per_k);
  j["taxonomy"] = "coarse-8way-approximation";
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// discriminator-data

struct DiscriminatorArgs {
  std::string authentic_path;
  std::string synthetic_path;
  std::string out_path;
  uint64_t seed = 0;
};

int run_discriminator_data(const DiscriminatorArgs& args) {
  const auto authentic = ged::read_pairs_jsonl(args.authentic_path);
  const auto synthetic = ged::read_pairs_jsonl(args.synthetic_path);
  const auto examples =
      ged::build_discriminator_set(authentic, synthetic, args.seed);
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw ged::IoError("cannot open for writing", args.out_path);
  for (const auto& e : examples) {
    out << e.grammatical << '\t' << e.ungrammatical << '\t'
        << ged::origin_name(e.origin) << '\n';
  }
  out.close();
  if (!out) throw ged::IoError("write failed", args.out_path);

  ged::RunManifest manifest("discriminator-data");
  manifest.set_config({{"authentic", args.authentic_path},
                       {"synthetic", args.synthetic_path},
                       {"out", args.out_path},
                       {"seed", args.seed}});
  manifest.add_input(args.authentic_path);
  manifest.add_input(args.synthetic_path);
  manifest.add_output(args.out_path);
  manifest.add_counter("examples", examples.size());
  manifest.write_beside(args.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gedkit: corpus engineering for token-level grammatical "
               "error detection"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("gedkit ") + ged::kToolVersion +
                                        " (format " + ged::kFormatVersion + ")");

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file; command-line flags take precedence");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert M2 to Multi-GED TSV");
  convert->add_option("--m2", convert_args.m2_path, "M2 input file")->required();
  convert->add_option("--out", convert_args.out_path, "TSV output")->required();
  convert->add_option("--annotator", convert_args.annotator,
                      "annotation layer to use");

  LabelArgs label_args;
  auto* label = app.add_subcommand(
      "label", "Align parallel sentences and emit token-level labels");
  label->add_option("--original", label_args.original_path,
                    "grammatical side, one sentence per line");
  label->add_option("--corrupted", label_args.corrupted_path,
                    "ungrammatical side, one sentence per line");
  label->add_option("--tsv", label_args.tsv_path, "original<TAB>corrupted file");
  label->add_option("--pairs", label_args.pairs_path, "pair JSONL file");
  label->add_option("--out", label_args.out_path, "TSV output")->required();
  label->add_option("--emit-edits", label_args.edits_path,
                    "also write a JSONL edit log");
  label->add_option("--tokenizer", label_args.tokenizer,
                    "whitespace|unicode-words|per-character|pretokenized");
  label->add_option("--language", label_args.language, "language code");
  label->add_option("--threads", label_args.threads, "worker count (0 = auto)");

  CorruptArgs corrupt_args;
  auto* corrupt = app.add_subcommand(
      "corrupt", "Inject rule-based artificial errors into clean sentences");
  corrupt->add_option("--in", corrupt_args.in_path, "one sentence per line")
      ->required();
  corrupt->add_option("--dict", corrupt_args.dict_path,
                      "word list (word or word<TAB>frequency per line)")
      ->required();
  corrupt->add_option("--out", corrupt_args.out_path, "pair JSONL output")
      ->required();
  corrupt->add_option("--seed", corrupt_args.config.seed, "global seed");
  corrupt->add_option("--p-word", corrupt_args.config.p_word,
                      "per-token word-error probability");
  corrupt->add_option("--p-char", corrupt_args.config.p_char,
                      "per-token character-noise probability");
  corrupt->add_option("--weights", corrupt_args.word_weights,
                      "word op weights, e.g. replace=0.7,delete=0.1,insert=0.1,swap=0.1");
  corrupt->add_option("--char-weights", corrupt_args.char_weights,
                      "character op weights, same syntax");
  corrupt->add_option("--max-distance", corrupt_args.config.max_distance,
                      "confusion distance bound (1 or 2)");
  corrupt->add_flag("--per-sentence-rate", corrupt_args.config.per_sentence_rate,
                    "draw one error count per sentence instead of per-token trials");
  corrupt->add_option("--tokenizer", corrupt_args.tokenizer,
                      "whitespace|unicode-words|per-character|pretokenized");
  corrupt->add_option("--language", corrupt_args.language, "language code");
  corrupt->add_option("--threads", corrupt_args.threads, "worker count (0 = auto)");

  ConfusionArgs confusion_args;
  auto* confusion = app.add_subcommand("confusion", "Inspect the confusion index");
  auto* confusion_build =
      confusion->add_subcommand("build", "Build the index and print stats");
  confusion_build->add_option("--dict", confusion_args.dict_path, "word list")
      ->required();
  confusion_build->add_option("--max-distance", confusion_args.max_distance,
                              "confusion distance bound (1 or 2)");
  auto* confusion_query =
      confusion->add_subcommand("query", "Print the confusion set of a word");
  confusion_query->add_option("--dict", confusion_args.dict_path, "word list")
      ->required();
  confusion_query->add_option("--max-distance", confusion_args.max_distance,
                              "confusion distance bound (1 or 2)");
  confusion_query->add_option("--word", confusion_args.word, "query word")
      ->required();
  confusion_query->add_option("--limit", confusion_args.limit,
                              "maximum candidates to print");
  confusion->require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand(
      "sample", "Deterministically sample clean sentences from a corpus");
  sample->add_option("--in", sample_args.in_path, "one sentence per line")
      ->required();
  sample->add_option("--out", sample_args.out_path, "output file")->required();
  sample->add_option("--n", sample_args.n, "sample size")->required();
  sample->add_option("--seed", sample_args.seed, "sampler seed");
  sample->add_option("--min-tokens", sample_args.min_tokens, "length lower bound");
  sample->add_option("--max-tokens", sample_args.max_tokens, "length upper bound");
  sample->add_option("--filter-pred", sample_args.pred_path,
                     "prediction file; sentences with a token at or above the "
                     "filter threshold are dropped");
  sample->add_option("--filter-threshold", sample_args.filter_threshold,
                     "error-probability cutoff for the filter");
  sample->add_option("--tokenizer", sample_args.tokenizer,
                     "whitespace|unicode-words|per-character|pretokenized");

  EvaluateArgs evaluate_args;
  auto* evaluate = app.add_subcommand(
      "evaluate", "Token-level precision/recall/F0.5 at a threshold");
  evaluate->add_option("--gold", evaluate_args.gold_path, "Multi-GED TSV")
      ->required();
  evaluate->add_option("--pred", evaluate_args.pred_path, "prediction file")
      ->required();
  evaluate->add_option("--threshold", evaluate_args.threshold,
                       "operating point (predicted i iff prob >= threshold)");

  PrCurveArgs pr_args;
  auto* pr = app.add_subcommand("pr-curve",
                                "Precision-recall sweep over all thresholds");
  pr->add_option("--gold", pr_args.gold_path, "Multi-GED TSV")->required();
  pr->add_option("--pred", pr_args.pred_path, "prediction file")->required();
  pr->add_option("--out", pr_args.out_path, "CSV output")->required();
  pr->add_option("--svg", pr_args.svg_path, "optional SVG rendering");

  AnalyzeEditsArgs analyze_edits_args;
  AnalyzeEntropyArgs analyze_entropy_args;
  auto* analyze = app.add_subcommand("analyze", "Error-type analysis");
  auto* analyze_edits = analyze->add_subcommand(
      "edits", "Classify an edit log into the 8-way error taxonomy");
  analyze_edits->add_option("--in", analyze_edits_args.in_path, "edit JSONL")
      ->required();
  analyze_edits->add_option("--out", analyze_edits_args.out_path,
                            "distribution JSON output")
      ->required();
  auto* analyze_entropy = analyze->add_subcommand(
      "entropy", "Normalized entropy of an error-type distribution");
  analyze_entropy->add_option("--in", analyze_entropy_args.dist_path,
                              "distribution JSON (from `analyze edits`)");
  analyze_entropy->add_option("--clusters", analyze_entropy_args.clusters_path,
                              "externally clustered edit<TAB>cluster_id file");
  analyze_entropy->add_option("--k", analyze_entropy_args.k_values,
                              "category count; repeat for multiple k, averaged");
  analyze->require_subcommand(1);

  DiscriminatorArgs discriminator_args;
  auto* discriminator = app.add_subcommand(
      "discriminator-data",
      "Build a balanced authentic-vs-synthetic sentence-pair set");
  discriminator
      ->add_option("--authentic", discriminator_args.authentic_path,
                   "authentic pair JSONL")
      ->required();
  discriminator
      ->add_option("--synthetic", discriminator_args.synthetic_path,
                   "synthetic pair JSONL")
      ->required();
  discriminator->add_option("--out", discriminator_args.out_path, "TSV output")
      ->required();
  discriminator->add_option("--seed", discriminator_args.seed, "sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version land here with a zero exit code
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitValidation;
  }

  try {
    const json config = load_config(config_path);
    if (corrupt->parsed()) {
      config_default(*corrupt, config, "--seed", "seed", corrupt_args.config.seed);
      config_default(*corrupt, config, "--p-word", "p_word",
                     corrupt_args.config.p_word);
      config_default(*corrupt, config, "--p-char", "p_char",
                     corrupt_args.config.p_char);
      config_default(*corrupt, config, "--max-distance", "max_distance",
                     corrupt_args.config.max_distance);
      config_default(*corrupt, config, "--weights", "word_op_weights",
                     corrupt_args.word_weights);
      config_default(*corrupt, config, "--char-weights", "char_op_weights",
                     corrupt_args.char_weights);
      config_default(*corrupt, config, "--tokenizer", "tokenizer",
                     corrupt_args.tokenizer);
      config_default(*corrupt, config, "--language", "language",
                     corrupt_args.language);
      return run_corrupt(corrupt_args);
    }
    if (convert->parsed()) return run_convert(convert_args);
    if (label->parsed()) {
      config_default(*label, config, "--tokenizer", "tokenizer",
                     label_args.tokenizer);
      config_default(*label, config, "--language", "language",
                     label_args.language);
      return run_label(label_args);
    }
    if (confusion->parsed()) {
      if (confusion_build->parsed()) return run_confusion_build(confusion_args);
      return run_confusion_query(confusion_args);
    }
    if (sample->parsed()) {
      config_default(*sample, config, "--seed", "seed", sample_args.seed);
      config_default(*sample, config, "--min-tokens", "min_tokens",
                     sample_args.min_tokens);
      config_default(*sample, config, "--max-tokens", "max_tokens",
                     sample_args.max_tokens);
      config_default(*sample, config, "--tokenizer", "tokenizer",
                     sample_args.tokenizer);
      return run_sample(sample_args);
    }
    if (evaluate->parsed()) return run_evaluate(evaluate_args);
    if (pr->parsed()) return run_pr_curve(pr_args);
    if (analyze->parsed()) {
      if (analyze_edits->parsed()) return run_analyze_edits(analyze_edits_args);
      return run_analyze_entropy(analyze_entropy_args);
    }
    if (discriminator->parsed()) {
      return run_discriminator_data(discriminator_args);
    }
    std::cerr << app.help();
    return kExitValidation;
  } catch (const ged::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ged::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
