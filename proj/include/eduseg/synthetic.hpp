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

// Synthetic annotated corpora standing in for a real discourse bank.
//
// Sentences are sequences of clauses; each clause is one top-level segment
// and may host appositive or relative segments nested after its subject.
// Clause starts are cued by connectives, clause ends by punctuation, and
// chunk and dependency columns are derived from the same construction.

#ifndef EDUSEG_SYNTHETIC_HPP_
#define EDUSEG_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "eduseg/corpus.hpp"
#include "eduseg/features.hpp"

namespace eduseg {

struct SyntheticConfig {
  std::uint64_t seed = 42;
  std::size_t documents = 47;
  std::size_t sentences_per_document = 12;
  // Chance that a clause hosts a nested segment.
  double nesting_prob = 0.1;
  // Chance that a non-initial clause opens with a connective.
  double marker_cue_prob = 0.8;
  // Chance that the chunker glues an unmarked clause start into a chunk
  // opened by the preceding comma, making it strictly chunk-internal.
  double chunk_noise_prob = 0.05;
  // Chance of a single-token segment before a non-initial clause.
  double singleton_prob = 0.01;

  void validate() const;
};

Corpus generate_synthetic(const SyntheticConfig& config);

// The connectives and report verbs the generator draws from.
Lexicons synthetic_lexicons();

void write_marker_lexicon(std::ostream& out, const Lexicons& lexicons);
void write_verb_lexicon(std::ostream& out, const Lexicons& lexicons);

}  // namespace eduseg

#endif  // EDUSEG_SYNTHETIC_HPP_
