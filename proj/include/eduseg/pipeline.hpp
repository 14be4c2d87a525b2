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

// End-to-end segmenter: feature extraction, resampled training, and the
// decode -> force -> repair prediction chain.

#ifndef EDUSEG_PIPELINE_HPP_
#define EDUSEG_PIPELINE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "eduseg/corpus.hpp"
#include "eduseg/features.hpp"
#include "eduseg/maxent.hpp"
#include "eduseg/resample.hpp"

namespace eduseg {

struct PredictOptions {
  bool force_boundaries = true;
  bool repair = true;
};

struct PipelineConfig {
  TrainConfig train;
  std::size_t min_count = 1;
  bool resample = true;
  PredictOptions predict;
};

struct TrainedSegmenter {
  TrainResult training;
  InstanceFilterReport filter;
  std::array<std::size_t, kNumLabels> corpus_label_counts{};
};

// Builds the feature space over all tokens, filters training instances
// (unless config.resample is off) and trains the classifier.
TrainedSegmenter train_segmenter(std::span<const Sentence> sentences, const Lexicons& lexicons,
                                 const PipelineConfig& config);

// Raw per-token argmax decisions.
LabelSequence decode_sentence(const MaxEntModel& model, const Sentence& sentence,
                              const Lexicons& lexicons);

// Applies forcing and repair to raw decisions as requested.
LabelSequence postprocess(const Sentence& sentence, LabelSequence decoded,
                          const PredictOptions& options);

LabelSequence predict_sentence(const MaxEntModel& model, const Sentence& sentence,
                               const Lexicons& lexicons, const PredictOptions& options);

// Per-token feature ids against one growing space, computed once so that
// cross-validation folds can reuse them.
class FeatureTable {
 public:
  FeatureTable(std::span<const Sentence> sentences, const Lexicons& lexicons);

  const FeatureSpace& space() const { return space_; }
  std::span<const FeatureId> ids(std::size_t sentence, std::size_t token) const {
    return table_[sentence][token];
  }

 private:
  FeatureSpace space_;
  std::vector<std::vector<std::vector<FeatureId>>> table_;
};

// Trains on the sentences listed in `train` and returns raw decisions for the
// sentences listed in `test` (in that order), after optional forcing but
// before repair. Equivalent to train_segmenter + decode on the subsets.
std::vector<LabelSequence> train_and_decode(const FeatureTable& table,
                                            std::span<const Sentence> sentences,
                                            std::span<const std::size_t> train,
                                            std::span<const std::size_t> test,
                                            const PipelineConfig& config);

}  // namespace eduseg

#endif  // EDUSEG_PIPELINE_HPP_
