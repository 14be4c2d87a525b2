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

#include "eduseg/resample.hpp"

#include "eduseg/errors.hpp"

namespace eduseg {
namespace {

BoundaryLabel gold_of(const Sentence& sentence, std::size_t i) {
  const auto& gold = sentence.tokens[i].gold;
  if (!gold) {
    throw ContractError("unannotated corpus: sentence " + std::to_string(sentence.id) + " token " +
                        std::to_string(i) + " has no boundary label");
  }
  return *gold;
}

}  // namespace

TokenFate training_fate(const Sentence& sentence, std::size_t index) {
  if (index == 0 || index + 1 == sentence.size()) return TokenFate::SentenceBoundary;
  if (sentence.tokens.at(index).strictly_chunk_internal()) return TokenFate::ChunkInternal;
  return TokenFate::Kept;
}

FilteredInstances filter_training(std::span<const Sentence> sentences) {
  FilteredInstances out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const Sentence& sentence = sentences[s];
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const BoundaryLabel label = gold_of(sentence, i);
      switch (training_fate(sentence, i)) {
        case TokenFate::SentenceBoundary:
          ++out.report.dropped_sentence_boundary;
          break;
        case TokenFate::ChunkInternal:
          ++out.report.dropped_chunk_internal;
          break;
        case TokenFate::Kept:
          out.kept.push_back({s, i});
          ++out.report.kept;
          ++out.report.kept_per_label[label_index(label)];
          break;
      }
    }
  }
  return out;
}

FilteredInstances keep_all(std::span<const Sentence> sentences) {
  FilteredInstances out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (std::size_t i = 0; i < sentences[s].size(); ++i) {
      out.kept.push_back({s, i});
      ++out.report.kept;
      ++out.report.kept_per_label[label_index(gold_of(sentences[s], i))];
    }
  }
  return out;
}

LabelSequence apply_forced_labels(const Sentence& sentence, const LabelSequence& predicted) {
  const std::size_t n = sentence.size();
  if (predicted.size() != n) {
    throw ContractError("predicted " + std::to_string(predicted.size()) +
                        " labels for a sentence of " + std::to_string(n) + " tokens");
  }
  LabelSequence out = predicted;
  for (std::size_t i = 0; i < n; ++i) {
    if (sentence.tokens[i].strictly_chunk_internal()) out[i] = BoundaryLabel::Inside;
  }
  if (n == 1) {
    out[0] = BoundaryLabel::BeginEnd;
  } else if (n > 1) {
    out.front() = BoundaryLabel::Begin;
    out.back() = BoundaryLabel::End;
  }
  return out;
}

}  // namespace eduseg
