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

#include "eduseg/pipeline.hpp"

#include <algorithm>

#include "eduseg/errors.hpp"
#include "eduseg/segment.hpp"

namespace eduseg {

TrainedSegmenter train_segmenter(std::span<const Sentence> sentences, const Lexicons& lexicons,
                                 const PipelineConfig& config) {
  TrainedSegmenter out;
  FeatureSpace space = build_feature_space(sentences, lexicons, config.min_count);
  const FilteredInstances filtered =
      config.resample ? filter_training(sentences) : keep_all(sentences);
  out.filter = filtered.report;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence.tokens) ++out.corpus_label_counts[label_index(*token.gold)];
  }

  Dataset data;
  std::size_t cached = sentences.size();
  std::vector<std::vector<std::string>> names;
  for (const TokenRef& ref : filtered.kept) {
    if (ref.sentence != cached) {
      names = sentence_feature_names(sentences[ref.sentence], lexicons);
      cached = ref.sentence;
    }
    const FeatureSpace& frozen = space;
    data.add(to_feature_vector(names[ref.token], frozen), *sentences[ref.sentence].tokens[ref.token].gold);
  }
  out.training = train(data, std::move(space), config.train);
  return out;
}

LabelSequence decode_sentence(const MaxEntModel& model, const Sentence& sentence,
                              const Lexicons& lexicons) {
  LabelSequence labels;
  labels.reserve(sentence.size());
  for (const auto& names : sentence_feature_names(sentence, lexicons)) {
    labels.push_back(model.decode(to_feature_vector(names, model.space())));
  }
  return labels;
}

LabelSequence postprocess(const Sentence& sentence, LabelSequence decoded,
                          const PredictOptions& options) {
  if (options.force_boundaries) decoded = apply_forced_labels(sentence, decoded);
  if (options.repair) decoded = repair(decoded);
  return decoded;
}

LabelSequence predict_sentence(const MaxEntModel& model, const Sentence& sentence,
                               const Lexicons& lexicons, const PredictOptions& options) {
  return postprocess(sentence, decode_sentence(model, sentence, lexicons), options);
}

FeatureTable::FeatureTable(std::span<const Sentence> sentences, const Lexicons& lexicons) {
  table_.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    auto& rows = table_.emplace_back();
    rows.reserve(sentence.size());
    for (const auto& names : sentence_feature_names(sentence, lexicons)) {
      rows.push_back(to_feature_vector(names, space_).ids);
    }
  }
}

std::vector<LabelSequence> train_and_decode(const FeatureTable& table,
                                            std::span<const Sentence> sentences,
                                            std::span<const std::size_t> train_ids,
                                            std::span<const std::size_t> test_ids,
                                            const PipelineConfig& config) {
  if (config.min_count == 0) throw ContractError("min_count must be at least 1");
  const std::size_t global = table.space().size();
  std::vector<std::size_t> counts(global, 0);
  for (std::size_t s : train_ids) {
    for (std::size_t i = 0; i < sentences[s].size(); ++i) {
      for (FeatureId id : table.ids(s, i)) ++counts[static_cast<std::size_t>(id)];
    }
  }
  // Local ids follow global id order, so mapped vectors stay sorted.
  std::vector<FeatureId> local(global, -1);
  FeatureSpace space;
  for (std::size_t g = 0; g < global; ++g) {
    if (counts[g] >= config.min_count) {
      local[g] = *space.intern(table.space().name(static_cast<FeatureId>(g)));
    }
  }
  space.freeze();

  const auto mapped = [&](std::size_t s, std::size_t i) {
    std::vector<FeatureId> ids;
    for (FeatureId id : table.ids(s, i)) {
      if (local[static_cast<std::size_t>(id)] >= 0) ids.push_back(local[static_cast<std::size_t>(id)]);
    }
    return ids;
  };

  Dataset data;
  for (std::size_t s : train_ids) {
    const Sentence& sentence = sentences[s];
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (!sentence.tokens[i].gold) {
        throw ContractError("unannotated corpus: training sentence " + std::to_string(s) +
                            " token " + std::to_string(i) + " has no boundary label");
      }
      if (config.resample && training_fate(sentence, i) != TokenFate::Kept) continue;
      data.add(mapped(s, i), *sentence.tokens[i].gold);
    }
  }
  const TrainResult trained = train(data, std::move(space), config.train);

  std::vector<LabelSequence> out;
  out.reserve(test_ids.size());
  for (std::size_t s : test_ids) {
    LabelSequence labels;
    for (std::size_t i = 0; i < sentences[s].size(); ++i) {
      labels.push_back(trained.model.decode(mapped(s, i)));
    }
    PredictOptions options = config.predict;
    options.repair = false;
    out.push_back(postprocess(sentences[s], std::move(labels), options));
  }
  return out;
}

}  // namespace eduseg
