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

// Clause-detection style scoring (segment starts, ends, single-token
// segments, exact complete segments), cross-validation and learning curves.

#ifndef EDUSEG_EVAL_HPP_
#define EDUSEG_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eduseg/corpus.hpp"
#include "eduseg/features.hpp"
#include "eduseg/pipeline.hpp"

namespace eduseg {

struct PRF {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // 1.0 on an empty denominator.
  double precision() const;
  double recall() const;
  // 0.0 when precision + recall is 0.
  double f1() const;

  PRF& operator+=(const PRF& other);
  friend bool operator==(const PRF&, const PRF&) = default;
};

struct EvalReport {
  PRF left;   // Begin tokens
  PRF right;  // End tokens
  PRF both;   // BeginEnd tokens
  PRF edus;   // exact spans, well-formed predicted sentences only
  // Alternative convention counting BeginEnd as a start (resp. an end).
  PRF left_with_singletons;
  PRF right_with_singletons;
  std::size_t sentences = 0;
  std::size_t well_formed = 0;

  double well_formed_rate() const {
    return sentences == 0 ? 1.0 : static_cast<double>(well_formed) / sentences;
  }
  EvalReport& operator+=(const EvalReport& other);
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Gold sentences must carry well-formed gold labels. Ill-formed predicted
// sentences contribute their gold segments to the EDU false negatives and
// nothing else to that row. Throws ContractError on shape mismatch.
EvalReport score(std::span<const Sentence> gold, std::span<const LabelSequence> predicted);

struct CrossValidationConfig {
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  bool document_folds = false;
  PipelineConfig pipeline;
};

// Trained-once cross-validation output: raw decisions (forced, unrepaired)
// for every sentence in corpus order, with the fold that predicted it.
struct CrossValidationDecisions {
  std::vector<Sentence> sentences;
  std::vector<std::size_t> fold_of_sentence;
  std::vector<LabelSequence> decoded;
  std::size_t folds = 0;
};

struct CrossValidationResult {
  EvalReport aggregate;  // micro-average over folds
  std::vector<EvalReport> per_fold;
  std::vector<LabelSequence> predictions;  // final labels, corpus sentence order
};

// Shuffled fold assignment: entry i is the fold of unit i (sentence, or
// document with document_folds). Throws ContractError if units < folds.
std::vector<std::size_t> assign_folds(std::size_t units, std::size_t folds, std::uint64_t seed);

CrossValidationDecisions cross_validate_decisions(const Corpus& docs, const Lexicons& lexicons,
                                                  const CrossValidationConfig& config);
CrossValidationResult score_decisions(const CrossValidationDecisions& decisions, bool repair);
CrossValidationResult cross_validate(const Corpus& docs, const Lexicons& lexicons,
                                     const CrossValidationConfig& config);

struct CurvePoint {
  std::size_t documents = 0;
  EvalReport report;
};

// step, 2*step, ... and finally the corpus size when it is not a multiple.
std::vector<std::size_t> curve_sizes(std::size_t num_documents, std::size_t step);

// Nested random document subsets of the sizes above, each cross-validated.
std::vector<CurvePoint> learning_curve(const Corpus& docs, const Lexicons& lexicons,
                                       std::size_t step_documents,
                                       const CrossValidationConfig& config);

// Aligned table with rows Left/Right/Both/EDUs and columns
// Recall/Precision/F-measure, followed by the well-formed rate.
std::string format_report(const EvalReport& report);
// Tab-separated: row, tp, fp, fn, recall, precision, f1.
std::string format_report_tsv(const EvalReport& report);
// size, left-F, right-F, edu-F per line.
std::string format_curve(const std::vector<CurvePoint>& curve);

}  // namespace eduseg

#endif  // EDUSEG_EVAL_HPP_
