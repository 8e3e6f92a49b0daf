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

#include "ged/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ged {

namespace {

void check_shapes(const std::vector<LabeledSentence>& gold,
                  const PredictionFile& pred) {
  if (gold.size() != pred.sentences.size()) {
    throw std::invalid_argument(
        "sentence count mismatch: gold has " + std::to_string(gold.size()) +
        ", predictions have " + std::to_string(pred.sentences.size()));
  }
  for (size_t s = 0; s < gold.size(); ++s) {
    const auto& g = gold[s];
    const auto& p = pred.sentences[s];
    if (g.tokens.size() != p.tokens.size()) {
      throw std::invalid_argument("token count mismatch at sentence " +
                                  std::to_string(s));
    }
    for (size_t t = 0; t < g.tokens.size(); ++t) {
      if (g.tokens[t] != p.tokens[t]) {
        throw std::invalid_argument(
            "token mismatch at sentence " + std::to_string(s) + ", position " +
            std::to_string(t) + ": gold '" + g.tokens[t] + "' vs predicted '" +
            p.tokens[t] + "'");
      }
    }
  }
}

}  // namespace

double f_beta_half(double precision, double recall) {
  const double denom = 0.25 * precision + recall;
  if (denom <= 0.0) {
    return (precision == 1.0 && recall == 1.0) ? 1.0 : 0.0;
  }
  return 1.25 * precision * recall / denom;
}

EvalReport score(const std::vector<LabeledSentence>& gold,
                 const PredictionFile& pred, double threshold) {
  check_shapes(gold, pred);
  EvalReport r;
  r.threshold = threshold;
  for (size_t s = 0; s < gold.size(); ++s) {
    const auto& g = gold[s];
    const auto& p = pred.sentences[s];
    for (size_t t = 0; t < g.tokens.size(); ++t) {
      const bool gold_i = g.labels[t] == Label::Incorrect;
      const bool pred_i = p.probabilities[t] >= threshold;
      if (gold_i && pred_i) ++r.true_positives;
      else if (!gold_i && pred_i) ++r.false_positives;
      else if (gold_i && !pred_i) ++r.false_negatives;
      else ++r.true_negatives;
    }
  }
  const uint64_t predicted = r.true_positives + r.false_positives;
  const uint64_t actual = r.true_positives + r.false_negatives;
  if (predicted > 0) {
    r.precision = static_cast<double>(r.true_positives) / static_cast<double>(predicted);
  } else {
    r.precision = actual == 0 ? 1.0 : 0.0;
  }
  r.recall = actual > 0
                 ? static_cast<double>(r.true_positives) / static_cast<double>(actual)
                 : 1.0;
  r.f_half = f_beta_half(r.precision, r.recall);
  return r;
}

PrCurve pr_curve(const std::vector<LabeledSentence>& gold,
                 const PredictionFile& pred) {
  check_shapes(gold, pred);

  // Sorted probability arrays make each threshold an O(log n) count query.
  std::vector<double> all_probs;
  std::vector<double> gold_i_probs;
  for (size_t s = 0; s < gold.size(); ++s) {
    const auto& g = gold[s];
    const auto& p = pred.sentences[s];
    for (size_t t = 0; t < g.tokens.size(); ++t) {
      all_probs.push_back(p.probabilities[t]);
      if (g.labels[t] == Label::Incorrect) gold_i_probs.push_back(p.probabilities[t]);
    }
  }
  std::sort(all_probs.begin(), all_probs.end());
  std::sort(gold_i_probs.begin(), gold_i_probs.end());

  std::vector<double> thresholds = all_probs;
  thresholds.push_back(0.0);
  thresholds.push_back(1.0);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const auto count_at_least = [](const std::vector<double>& sorted, double th) {
    return static_cast<uint64_t>(sorted.end() -
                                 std::lower_bound(sorted.begin(), sorted.end(), th));
  };

  const uint64_t actual = gold_i_probs.size();
  PrCurve curve;
  curve.points.reserve(thresholds.size());
  for (double th : thresholds) {
    const uint64_t tp = count_at_least(gold_i_probs, th);
    const uint64_t predicted = count_at_least(all_probs, th);
    PrPoint pt;
    pt.threshold = th;
    if (predicted > 0) {
      pt.precision = static_cast<double>(tp) / static_cast<double>(predicted);
    } else {
      pt.precision = actual == 0 ? 1.0 : 0.0;
    }
    pt.recall = actual > 0 ? static_cast<double>(tp) / static_cast<double>(actual)
                           : 1.0;
    curve.points.push_back(pt);
  }
  return curve;
}

std::pair<double, double> best_f_half(const PrCurve& curve) {
  if (curve.points.empty()) throw std::invalid_argument("empty PR curve");
  double best_threshold = curve.points.front().threshold;
  double best = -1.0;
  for (const PrPoint& pt : curve.points) {
    const double f = f_beta_half(pt.precision, pt.recall);
    if (f > best) {
      best = f;
      best_threshold = pt.threshold;
    }
  }
  return {best_threshold, best};
}

}  // namespace ged
