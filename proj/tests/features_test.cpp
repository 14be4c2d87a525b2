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
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eduseg/errors.hpp"
#include "eduseg/features.hpp"
#include "eduseg/synthetic.hpp"
#include "test_util.hpp"

namespace eduseg {
namespace {

bool has(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t count_prefix(const std::vector<std::string>& names, const std::string& prefix) {
  return static_cast<std::size_t>(std::count_if(
      names.begin(), names.end(), [&](const std::string& n) { return n.starts_with(prefix); }));
}

Lexicons donc_lexicon() {
  Lexicons lex;
  lex.discourse_markers = {{"donc"}};
  return lex;
}

std::vector<Sentence> synthetic_sentences(std::size_t docs) {
  SyntheticConfig config;
  config.documents = docs;
  return flatten(generate_synthetic(config));
}

TEST(Extract, MondialementHasLemmaButNoMarker) {
  const Sentence s = testing::pieces_sentence();
  const auto names = feature_names(s, 3, donc_lexicon());
  EXPECT_TRUE(has(names, "lem[0]=mondialement"));
  EXPECT_FALSE(has(names, "markerStart=1"));
  EXPECT_FALSE(has(names, "markerIn=1"));
}

TEST(Extract, DoncIsAMarker) {
  const Sentence s = testing::pieces_sentence();
  const auto names = feature_names(s, 6, donc_lexicon());
  EXPECT_TRUE(has(names, "markerStart=1"));
  EXPECT_TRUE(has(names, "markerIn=1"));
  EXPECT_TRUE(has(names, "lem[-3]=mondialement"));
  EXPECT_TRUE(has(names, "pos[1]=X"));
}

TEST(Extract, SingleTokenSentence) {
  const Sentence s = testing::make_sentence({"Oui"});
  const auto names = feature_names(s, 0, Lexicons{});
  EXPECT_TRUE(has(names, "distL=100"));
  EXPECT_TRUE(has(names, "distR=100"));
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    EXPECT_TRUE(has(names, "pad[" + std::to_string(k) + "]=1")) << k;
  }
  EXPECT_EQ(count_prefix(names, "lemNg"), 0u);
}

TEST(Extract, PositionBuckets) {
  const Sentence s = testing::make_sentence({"a", "b", "c"});
  const auto names = feature_names(s, 0, Lexicons{});
  EXPECT_TRUE(has(names, "distL=34"));   // ceil(100/3)
  EXPECT_TRUE(has(names, "distR=100"));
  EXPECT_TRUE(has(names, "distL[1]=67"));
  EXPECT_TRUE(has(names, "distR[2]=34"));
  EXPECT_TRUE(has(names, "pad[-1]=1"));
}

TEST(Extract, TwoTokenMarkerLongestMatch) {
  Lexicons lex;
  lex.discourse_markers = {{"alors"}, {"alors", "que"}};
  const Sentence s = testing::make_sentence({"il", "part", "Alors", "que", "je", "reste"});
  const auto at2 = feature_names(s, 2, lex);
  const auto at3 = feature_names(s, 3, lex);
  const auto at4 = feature_names(s, 4, lex);
  EXPECT_TRUE(has(at2, "markerStart=1"));
  EXPECT_TRUE(has(at2, "markerIn=1"));
  EXPECT_FALSE(has(at3, "markerStart=1"));
  EXPECT_TRUE(has(at3, "markerIn=1"));
  EXPECT_FALSE(has(at4, "markerIn=1"));
}

TEST(Extract, SpeechVerb) {
  Lexicons lex;
  lex.speech_verbs = {"dire"};
  Sentence s = testing::make_sentence({"il", "dit", "que"});
  s.tokens[1].lemma = "dire";
  EXPECT_TRUE(has(feature_names(s, 1, lex), "speechVerb=1"));
  EXPECT_FALSE(has(feature_names(s, 0, lex), "speechVerb=1"));
}

TEST(Extract, DependencyFeatures) {
  Sentence s = testing::make_sentence({"a", "b", "c", "d", "e"});
  // 4 -obj-> 3 -mod-> 2 -suj-> 1 -dep-> 0 (root)
  for (std::size_t i = 1; i < 5; ++i) s.tokens[i].head = i - 1;
  s.tokens[1].deprel = "dep";
  s.tokens[2].deprel = "suj";
  s.tokens[3].deprel = "mod";
  s.tokens[4].deprel = "obj";
  const auto names = feature_names(s, 4, Lexicons{});
  EXPECT_TRUE(has(names, "depPath=obj|mod|suj"));
  EXPECT_TRUE(has(names, "depSub1=obj"));
  EXPECT_TRUE(has(names, "depSub2=obj|mod"));
  EXPECT_TRUE(has(names, "depIn=<none>"));
  EXPECT_TRUE(has(feature_names(s, 3, Lexicons{}), "depIn=obj"));
  EXPECT_EQ(count_prefix(names, "depPath="), 1u);
}

TEST(Extract, ChunkFeatures) {
  Sentence s = testing::make_sentence({"à", "une", "usine"});
  s.tokens[0].chunk_path = {{"PP", ChunkPosition::Begin}};
  s.tokens[1].chunk_path = {{"NP", ChunkPosition::Begin}, {"PP", ChunkPosition::Inside}};
  s.tokens[2].chunk_path = {{"NP", ChunkPosition::End}, {"PP", ChunkPosition::End}};
  const auto names = feature_names(s, 1, Lexicons{});
  EXPECT_TRUE(has(names, "chunkStart=1"));
  EXPECT_FALSE(has(names, "chunkEnd=1"));
  EXPECT_TRUE(has(names, "chunkStart[-1]=1"));
  EXPECT_TRUE(has(names, "chunkEnd[1]=1"));
  EXPECT_TRUE(has(names, "chunkSeq=NP|PP"));
  EXPECT_TRUE(has(names, "proj[NP.start]=1"));
  EXPECT_TRUE(has(names, "proj[PP.middle]=1"));
  EXPECT_TRUE(has(names, "proj[VP.end]=0"));
  EXPECT_TRUE(has(names, "chkNg[-1,2]=PP|NP"));
  EXPECT_TRUE(has(feature_names(testing::make_sentence({"x"}), 0, Lexicons{}),
                  "chunkSeq=<none>"));
}

TEST(Extract, Trigrams) {
  const Sentence s = testing::make_sentence({"a", "b", "c", "d"});
  const auto names = feature_names(s, 1, Lexicons{});
  EXPECT_TRUE(has(names, "lem3[-]=<s>|<s>|a"));
  EXPECT_TRUE(has(names, "lem3[+]=c|d|</s>"));
  EXPECT_TRUE(has(names, "pos3[-]=<s>|<s>|X"));
}

TEST(Extract, NgramCountFormula) {
  for (const Sentence& s : synthetic_sentences(2)) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t windows = 0;
      for (std::size_t k = 2; k <= 6; ++k) {
        for (std::size_t start = 0; start + k <= n; ++start) {
          windows += start <= i && i < start + k;
        }
      }
      const auto names = feature_names(s, i, Lexicons{});
      const std::size_t ngrams = count_prefix(names, "lemNg[") + count_prefix(names, "posNg[") +
                                 count_prefix(names, "chkNg[");
      ASSERT_EQ(ngrams, windows * 3) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Extract, Deterministic) {
  const Lexicons lex = synthetic_lexicons();
  for (const Sentence& s : synthetic_sentences(1)) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ASSERT_EQ(feature_names(s, i, lex), feature_names(s, i, lex));
    }
  }
  const auto sentences = synthetic_sentences(1);
  const FeatureSpace space = build_feature_space(std::span<const Sentence>(sentences), lex);
  EXPECT_EQ(extract_features(sentences[0], 2, lex, space).ids,
            extract_features(sentences[0], 2, lex, space).ids);
}

std::vector<std::string> non_dependency(std::vector<std::string> names) {
  std::erase_if(names, [](const std::string& n) { return is_dependency_feature(n); });
  std::sort(names.begin(), names.end());
  return names;
}

TEST(Extract, Locality) {
  const Lexicons lex = synthetic_lexicons();
  const auto sentences = synthetic_sentences(3);
  std::mt19937_64 rng(5);
  std::size_t checked = 0;
  for (const Sentence& s : sentences) {
    const std::size_t n = s.size();
    if (n < 9) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((i > j ? i - j : j - i) <= 6) continue;
        Sentence changed = s;
        Token& t = changed.tokens[j];
        const Token& donor = sentences[rng() % sentences.size()].tokens.front();
        t.form = "donc";
        t.lemma = donor.lemma + "_x";
        t.pos = "ZZ";
        t.category = "ZZ";
        t.chunk_path = {{"VP", ChunkPosition::Singleton}};
        t.deprel = "changed";
        ASSERT_EQ(non_dependency(feature_names(s, i, lex)),
                  non_dependency(feature_names(changed, i, lex)))
            << "i=" << i << " j=" << j;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Space, FrozenNeverGrows) {
  const Lexicons lex = synthetic_lexicons();
  const auto sentences = synthetic_sentences(1);
  const auto half = std::span<const Sentence>(sentences).first(2);
  FeatureSpace space = build_feature_space(half, lex);
  ASSERT_TRUE(space.frozen());
  const std::size_t size = space.size();
  for (const Sentence& s : sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const FeatureVector v = extract_features(s, i, lex, space);
      for (FeatureId id : v.ids) ASSERT_LT(static_cast<std::size_t>(id), size);
      ASSERT_TRUE(std::is_sorted(v.ids.begin(), v.ids.end()));
    }
  }
  EXPECT_EQ(space.size(), size);
  EXPECT_FALSE(space.intern("never-seen").has_value());
}

TEST(Space, GrowingSpaceIsABijection) {
  FeatureSpace space;
  EXPECT_EQ(space.intern("a"), 0);
  EXPECT_EQ(space.intern("b"), 1);
  EXPECT_EQ(space.intern("a"), 0);
  EXPECT_EQ(space.name(1), "b");
  EXPECT_EQ(space.find("c"), std::nullopt);
  const FeatureVector v = to_feature_vector({"b", "a", "b"}, space);
  EXPECT_EQ(v.ids, (std::vector<FeatureId>{0, 1}));
  space.freeze();
  const FeatureSpace& frozen = space;
  EXPECT_EQ(to_feature_vector({"z", "b"}, frozen).ids, (std::vector<FeatureId>{1}));
}

TEST(Space, MinCountOneIsTheUnion) {
  const Sentence s = testing::make_sentence({"a", "b"});
  const std::vector<Sentence> one{s};
  const FeatureSpace space = build_feature_space(std::span<const Sentence>(one), Lexicons{});
  std::set<std::string> expected;
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& n : feature_names(s, i, Lexicons{})) expected.insert(n);
  }
  std::set<std::string> actual;
  for (std::size_t id = 0; id < space.size(); ++id) {
    actual.insert(space.name(static_cast<FeatureId>(id)));
  }
  EXPECT_EQ(actual, expected);
}

TEST(Space, MinCountRecount) {
  const Lexicons lex = synthetic_lexicons();
  const auto sentences = synthetic_sentences(3);
  std::map<std::string, std::size_t> counts;
  for (const Sentence& s : sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (const auto& n : feature_names(s, i, lex)) ++counts[n];
    }
  }
  for (std::size_t min_count : {1u, 2u, 5u}) {
    const FeatureSpace space =
        build_feature_space(std::span<const Sentence>(sentences), lex, min_count);
    std::size_t expected = 0;
    for (const auto& [name, c] : counts) {
      if (c >= min_count) {
        ++expected;
        ASSERT_TRUE(space.find(name).has_value()) << name;
      } else {
        ASSERT_FALSE(space.find(name).has_value()) << name;
      }
    }
    EXPECT_EQ(space.size(), expected) << min_count;
  }
}

TEST(Space, CorpusOverloadMatchesSentences) {
  SyntheticConfig config;
  config.documents = 2;
  const Corpus docs = generate_synthetic(config);
  const auto sentences = flatten(docs);
  const FeatureSpace a = build_feature_space(docs, synthetic_lexicons());
  const FeatureSpace b =
      build_feature_space(std::span<const Sentence>(sentences), synthetic_lexicons());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t id = 0; id < a.size(); ++id) {
    EXPECT_EQ(a.name(static_cast<FeatureId>(id)), b.name(static_cast<FeatureId>(id)));
  }
}

TEST(Extract, IndexOutOfRange) {
  const Sentence s = testing::make_sentence({"a"});
  EXPECT_THROW(feature_names(s, 1, Lexicons{}), ContractError);
}

TEST(Lexicon, ReadersNormalize) {
  std::istringstream markers("# connectives\nDonc\n\nalors  que\ndonc\n");
  const auto m = read_marker_lexicon(markers);
  EXPECT_EQ(m, (std::vector<std::vector<std::string>>{{"donc"}, {"alors", "que"}}));
  std::istringstream verbs("Dire\n# x\naffirmer\ndire\n");
  EXPECT_EQ(read_verb_lexicon(verbs), (std::set<std::string>{"affirmer", "dire"}));
  EXPECT_EQ(to_lower_utf8("ÉCOULABLES Été"), "écoulables été");
}

TEST(Lexicon, MissingFileIsAnIoError) {
  EXPECT_THROW(load_lexicons("/nonexistent/markers.txt", ""), IoError);
  const Lexicons none = load_lexicons("", "");
  EXPECT_TRUE(none.discourse_markers.empty());
  EXPECT_TRUE(none.speech_verbs.empty());
}

}  // namespace
}  // namespace eduseg
