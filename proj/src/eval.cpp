// Copyright 2026 The eduseg Authors.
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

#include "eduseg/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

#include "eduseg/errors.hpp"
#include "eduseg/segment.hpp"

namespace eduseg {
namespace {

void count_token(PRF& prf, bool gold_positive, bool predicted_positive) {
  if (gold_positive && predicted_positive) ++prf.tp;
  else if (predicted_positive) ++prf.fp;
  else if (gold_positive) ++prf.fn;
}

std::string fixed(double value, int digits) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

double PRF::precision() const {
  return tp + fp == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double PRF::recall() const {
  return tp + fn == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double PRF::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

PRF& PRF::operator+=(const PRF& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

EvalReport& EvalReport::operator+=(const EvalReport& other) {
  left += other.left;
  right += other.right;
  both += other.both;
  edus += other.edus;
  left_with_singletons += other.left_with_singletons;
  right_with_singletons += other.right_with_singletons;
  sentences += other.sentences;
  well_formed += other.well_formed;
  return *this;
}

EvalReport score(std::span<const Sentence> gold, std::span<const LabelSequence> predicted) {
  if (gold.size() != predicted.size()) {
    throw ContractError("score: " + std::to_string(gold.size()) + " gold sentences but " +
                        std::to_string(predicted.size()) + " predicted");
  }
  EvalReport report;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const LabelSequence reference = gold[s].gold_labels();
    const LabelSequence& guess = predicted[s];
    if (guess.size() != reference.size()) {
      throw ContractError("score: sentence " + std::to_string(s) + " has " +
                          std::to_string(reference.size()) + " tokens but " +
                          std::to_string(guess.size()) + " predicted labels");
    }
    for (std::size_t i = 0; i < reference.size(); ++i) {
      const BoundaryLabel g = reference[i];
      const BoundaryLabel p = guess[i];
      using L = BoundaryLabel;
      count_token(report.left, g == L::Begin, p == L::Begin);
      count_token(report.right, g == L::End, p == L::End);
      count_token(report.both, g == L::BeginEnd, p == L::BeginEnd);
      count_token(report.left_with_singletons, g == L::Begin || g == L::BeginEnd,
                  p == L::Begin || p == L::BeginEnd);
      count_token(report.right_with_singletons, g == L::End || g == L::BeginEnd,
                  p == L::End || p == L::BeginEnd);
    }
    const Segmentation reference_segments = labels_to_segments(reference);
    ++report.sentences;
    if (!is_well_formed(guess)) {
      report.edus.fn += reference_segments.size();
      continue;
    }
    ++report.well_formed;
    const Segmentation guess_segments = labels_to_segments(guess);
    std::vector<Segment> common;
    std::set_intersection(reference_segments.begin(), reference_segments.end(),
                          guess_segments.begin(), guess_segments.end(), std::back_inserter(common));
    report.edus.tp += common.size();
    report.edus.fp += guess_segments.size() - common.size();
    report.edus.fn += reference_segments.size() - common.size();
  }
  return report;
}

std::vector<std::size_t> assign_folds(std::size_t units, std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw ContractError("cross-validation needs at least 2 folds");
  if (units < folds) {
    throw ContractError("cannot split " + std::to_string(units) + " units into " +
                        std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(units);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> fold_of(units);
  for (std::size_t position = 0; position < units; ++position) {
    fold_of[order[position]] = position * folds / units;
  }
  return fold_of;
}

CrossValidationDecisions cross_validate_decisions(const Corpus& docs, const Lexicons& lexicons,
                                                  const CrossValidationConfig& config) {
  CrossValidationDecisions out;
  out.folds = config.folds;
  std::vector<std::size_t> doc_of_sentence;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& sentence : docs[d].sentences) {
      out.sentences.push_back(sentence);
      doc_of_sentence.push_back(d);
    }
  }
  const std::size_t units = config.document_folds ? docs.size() : out.sentences.size();
  const std::vector<std::size_t> unit_fold = assign_folds(units, config.folds, config.seed);
  out.fold_of_sentence.resize(out.sentences.size());
  for (std::size_t s = 0; s < out.sentences.size(); ++s) {
    out.fold_of_sentence[s] = unit_fold[config.document_folds ? doc_of_sentence[s] : s];
  }

  const FeatureTable table(out.sentences, lexicons);
  out.decoded.resize(out.sentences.size());
  for (std::size_t fold = 0; fold < config.folds; ++fold) {
    std::vector<std::size_t> train_ids, test_ids;
    for (std::size_t s = 0; s < out.sentences.size(); ++s) {
      (out.fold_of_sentence[s] == fold ? test_ids : train_ids).push_back(s);
    }
    auto decoded = train_and_decode(table, out.sentences, train_ids, test_ids, config.pipeline);
    for (std::size_t k = 0; k < test_ids.size(); ++k) out.decoded[test_ids[k]] = std::move(decoded[k]);
  }
  return out;
}

CrossValidationResult score_decisions(const CrossValidationDecisions& decisions, bool repaired) {
  CrossValidationResult result;
  result.predictions.reserve(decisions.decoded.size());
  for (const auto& labels : decisions.decoded) {
    result.predictions.push_back(repaired ? repair(labels) : labels);
  }
  for (std::size_t fold = 0; fold < decisions.folds; ++fold) {
    std::vector<Sentence> gold;
    std::vector<LabelSequence> guess;
    for (std::size_t s = 0; s < decisions.sentences.size(); ++s) {
      if (decisions.fold_of_sentence[s] != fold) continue;
      gold.push_back(decisions.sentences[s]);
      guess.push_back(result.predictions[s]);
    }
    result.per_fold.push_back(score(gold, guess));
    result.aggregate += result.per_fold.back();
  }
  return result;
}

CrossValidationResult cross_validate(const Corpus& docs, const Lexicons& lexicons,
                                     const CrossValidationConfig& config) {
  return score_decisions(cross_validate_decisions(docs, lexicons, config),
                         config.pipeline.predict.repair);
}

std::vector<std::size_t> curve_sizes(std::size_t num_documents, std::size_t step) {
  if (step == 0) throw ContractError("learning-curve step must be at least 1");
  if (num_documents < step) {
    throw ContractError("corpus of " + std::to_string(num_documents) +
                        " documents is smaller than the step of " + std::to_string(step));
  }
  std::vector<std::size_t> sizes;
  for (std::size_t size = step; size <= num_documents; size += step) sizes.push_back(size);
  if (sizes.back() != num_documents) sizes.push_back(num_documents);
  return sizes;
}

std::vector<CurvePoint> learning_curve(const Corpus& docs, const Lexicons& lexicons,
                                       std::size_t step_documents,
                                       const CrossValidationConfig& config) {
  const std::vector<std::size_t> sizes = curve_sizes(docs.size(), step_documents);
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<CurvePoint> curve;
  for (std::size_t size : sizes) {
    Corpus subset;
    for (std::size_t k = 0; k < size; ++k) subset.push_back(docs[order[k]]);
    CrossValidationConfig point_config = config;
    point_config.seed = rng();
    curve.push_back({size, cross_validate(subset, lexicons, point_config).aggregate});
  }
  return curve;
}

std::string format_report(const EvalReport& report) {
  std::string out = "Class   Recall  Precision  F-measure\n";
  const auto row = [&](const char* name, const PRF& prf) {
    char line[96];
    std::snprintf(line, sizeof(line), "%-6s  %6.3f  %9.3f  %9.3f\n", name, prf.recall(),
                  prf.precision(), prf.f1());
    out += line;
  };
  row("Left", report.left);
  row("Right", report.right);
  row("Both", report.both);
  out += "------------------------------------\n";
  row("EDUs", report.edus);
  out += "Well-formed: " + fixed(report.well_formed_rate(), 3) + " (" +
         std::to_string(report.well_formed) + "/" + std::to_string(report.sentences) +
         " sentences)\n";
  return out;
}

std::string format_report_tsv(const EvalReport& report) {
  std::string out = "row\ttp\tfp\tfn\trecall\tprecision\tf1\n";
  const auto row = [&](const char* name, const PRF& prf) {
    out += std::string(name) + '\t' + std::to_string(prf.tp) + '\t' + std::to_string(prf.fp) +
           '\t' + std::to_string(prf.fn) + '\t' + fixed(prf.recall(), 6) + '\t' +
           fixed(prf.precision(), 6) + '\t' + fixed(prf.f1(), 6) + '\n';
  };
  row("left", report.left);
  row("right", report.right);
  row("both", report.both);
  row("edus", report.edus);
  row("left+singletons", report.left_with_singletons);
  row("right+singletons", report.right_with_singletons);
  out += "well_formed\t" + std::to_string(report.well_formed) + '\t' +
         std::to_string(report.sentences) + '\t' + fixed(report.well_formed_rate(), 6) + '\n';
  return out;
}

std::string format_curve(const std::vector<CurvePoint>& curve) {
  std::string out = "size\tleft-F\tright-F\tedu-F\n";
  for (const auto& point : curve) {
    out += std::to_string(point.documents) + '\t' + fixed(point.report.left.f1(), 4) + '\t' +
           fixed(point.report.right.f1(), 4) + '\t' + fixed(point.report.edus.f1(), 4) + '\n';
  }
  return out;
}

}  // namespace eduseg
