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

#ifndef GED_EVALUATE_HPP
#define GED_EVALUATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ged/types.hpp"

namespace ged {

/// Token-level counts and metrics at one operating point. Positive class
/// is the i label; a token is predicted i iff probability >= threshold.
/// Micro-averaged over all tokens of the corpus.
struct EvalReport {
  uint64_t true_positives = 0;
  uint64_t false_positives = 0;
  uint64_t false_negatives = 0;
  uint64_t true_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_half = 0.0;
  double threshold = 0.5;
};

struct PrPoint {
  double threshold;
  double precision;
  double recall;
};

/// Precision/recall at every distinct predicted probability plus the
/// sentinel thresholds 0 and 1; thresholds strictly increasing.
struct PrCurve {
  std::vector<PrPoint> points;
};

/// Zero-denominator conventions: with no predicted positives, precision
/// is 1 when there are also no gold positives, else 0; with no gold
/// positives, recall is 1; F0.5 is 0 on a zero denominator unless both
/// precision and recall are 1.
double f_beta_half(double precision, double recall);

EvalReport score(const std::vector<LabeledSentence>& gold,
                 const PredictionFile& pred, double threshold);

PrCurve pr_curve(const std::vector<LabeledSentence>& gold,
                 const PredictionFile& pred);

/// Curve point with maximal F0.5; ties resolve to the lower threshold.
std::pair<double, double> best_f_half(const PrCurve& curve);

}  // namespace ged

#endif  // GED_EVALUATE_HPP
