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

// Chunk-guided training filter and the matching label forcing at test time.
//
// Training ignores sentence-boundary tokens and tokens strictly inside a
// chunk; at prediction those tokens get fixed labels instead.

#ifndef EDUSEG_RESAMPLE_HPP_
#define EDUSEG_RESAMPLE_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "eduseg/corpus.hpp"

namespace eduseg {

struct TokenRef {
  std::size_t sentence = 0;
  std::size_t token = 0;

  friend bool operator==(const TokenRef&, const TokenRef&) = default;
};

struct InstanceFilterReport {
  std::size_t kept = 0;
  std::size_t dropped_sentence_boundary = 0;
  std::size_t dropped_chunk_internal = 0;
  std::array<std::size_t, kNumLabels> kept_per_label{};

  std::size_t total() const { return kept + dropped_sentence_boundary + dropped_chunk_internal; }
};

struct FilteredInstances {
  std::vector<TokenRef> kept;  // corpus order
  InstanceFilterReport report;
};

enum class TokenFate { Kept, SentenceBoundary, ChunkInternal };

// Why the token at `index` is or is not used for training.
TokenFate training_fate(const Sentence& sentence, std::size_t index);

// Throws ContractError when a token has no gold label.
FilteredInstances filter_training(std::span<const Sentence> sentences);

// Every token, no filtering; same report shape.
FilteredInstances keep_all(std::span<const Sentence> sentences);

// Chunk-internal tokens become Inside, then the first token Begin and the
// last End (BeginEnd for a one-token sentence).
LabelSequence apply_forced_labels(const Sentence& sentence, const LabelSequence& predicted);

}  // namespace eduseg

#endif  // EDUSEG_RESAMPLE_HPP_
