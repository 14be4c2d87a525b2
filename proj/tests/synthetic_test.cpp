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


#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "eduseg/errors.hpp"
#include "eduseg/features.hpp"
#include "eduseg/resample.hpp"
#include "eduseg/segment.hpp"
#include "eduseg/synthetic.hpp"

namespace eduseg {
namespace {

TEST(Generator, SeedFixesTheCorpus) {
  SyntheticConfig config;
  config.documents = 5;
  const std::string a = write_corpus_string(generate_synthetic(config));
  EXPECT_EQ(a, write_corpus_string(generate_synthetic(config)));
  config.seed = 43;
  EXPECT_NE(a, write_corpus_string(generate_synthetic(config)));
}

TEST(Generator, NoNestingMeansNoNestedSegments) {
  SyntheticConfig config;
  config.nesting_prob = 0.0;
  const CorpusStats stats = corpus_stats(generate_synthetic(config));
  EXPECT_EQ(stats.nested_segments, 0u);
  EXPECT_GT(stats.segments, 0u);
}

TEST(Generator, DefaultsAreCalibrated) {
  const Corpus docs = generate_synthetic(SyntheticConfig{});
  const CorpusStats stats = corpus_stats(docs);
  EXPECT_EQ(stats.documents, 47u);
  EXPECT_GE(stats.nested_proportion(), 0.08);
  EXPECT_LE(stats.nested_proportion(), 0.12);
  EXPECT_GE(stats.segments_per_document(), 33.0 * 0.8);
  EXPECT_LE(stats.segments_per_document(), 33.0 * 1.2);
  EXPECT_EQ(stats.ill_formed_sentences, 0u);
}

TEST(Generator, GoldIsWellFormedAndStructured) {
  SyntheticConfig config;
  config.documents = 10;
  config.singleton_prob = 0.2;
  const Corpus docs = generate_synthetic(config);
  const Lexicons lex = synthetic_lexicons();
  std::size_t singletons = 0, marker_starts = 0;
  for (const Sentence& s : flatten(docs)) {
    const LabelSequence gold = s.gold_labels();
    ASSERT_TRUE(is_well_formed(gold));
    ASSERT_EQ(apply_forced_labels(s, gold).front(), gold.front());
    for (std::size_t i = 0; i < s.size(); ++i) {
      singletons += gold[i] == BoundaryLabel::BeginEnd;
      if (gold[i] == BoundaryLabel::Begin && i > 0) {
        const auto names = feature_names(s, i, lex);
        marker_starts += std::find(names.begin(), names.end(), "markerStart=1") != names.end();
      }
    }
  }
  EXPECT_GT(singletons, 0u);
  EXPECT_GT(marker_starts, 0u);
}

TEST(Generator, RejectsDegenerateParameters) {
  SyntheticConfig config;
  config.sentences_per_document = 0;
  EXPECT_THROW(generate_synthetic(config), ContractError);
  config = SyntheticConfig{};
  config.nesting_prob = 1.5;
  EXPECT_THROW(generate_synthetic(config), ContractError);
  config = SyntheticConfig{};
  config.documents = 0;
  EXPECT_THROW(generate_synthetic(config), ContractError);
}

TEST(Generator, LexiconsRoundTrip) {
  const Lexicons lex = synthetic_lexicons();
  std::stringstream markers, verbs;
  write_marker_lexicon(markers, lex);
  write_verb_lexicon(verbs, lex);
  EXPECT_EQ(read_marker_lexicon(markers), lex.discourse_markers);
  EXPECT_EQ(read_verb_lexicon(verbs), lex.speech_verbs);
  EXPECT_FALSE(lex.discourse_markers.empty());
  EXPECT_FALSE(lex.speech_verbs.empty());
}

}  // namespace
}  // namespace eduseg
