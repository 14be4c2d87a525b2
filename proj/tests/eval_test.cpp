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
#include <random>
#include <string>
#include <vector>

#include "eduseg/errors.hpp"
#include "eduseg/eval.hpp"
#include "eduseg/segment.hpp"
#include "eduseg/synthetic.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace eduseg {
namespace {

using testing::make_sentence;

EvalReport score_one(const std::string& gold, const std::string& predicted) {
  const LabelSequence g = parse_labels(gold);
  std::vector<std::string> forms(g.size(), "w");
  const std::vector<Sentence> sentences{make_sentence(forms, g)};
  const std::vector<LabelSequence> pred{parse_labels(predicted)};
  return score(sentences, pred);
}

TEST(Prf, Arithmetic) {
  PRF p{3, 1, 2};
  EXPECT_DOUBLE_EQ(p.precision(), 0.75);
  EXPECT_DOUBLE_EQ(p.recall(), 0.6);
  EXPECT_DOUBLE_EQ(p.f1(), 2 * 0.75 * 0.6 / 1.35);
  PRF empty;
  EXPECT_DOUBLE_EQ(empty.precision(), 1.0);
  EXPECT_DOUBLE_EQ(empty.recall(), 1.0);
  PRF zero{0, 2, 3};
  EXPECT_DOUBLE_EQ(zero.f1(), 0.0);
  p += PRF{1, 1, 1};
  EXPECT_EQ(p, (PRF{4, 2, 3}));
}

TEST(Score, PerfectPrediction) {
  const Sentence s = testing::pieces_sentence();
  const std::vector<Sentence> gold{s};
  const std::vector<LabelSequence> pred{s.gold_labels()};
  const EvalReport r = score(gold, pred);
  for (const PRF* row : {&r.left, &r.right, &r.both, &r.edus}) {
    EXPECT_DOUBLE_EQ(row->precision(), 1.0);
    EXPECT_DOUBLE_EQ(row->recall(), 1.0);
  }
  EXPECT_EQ(r.edus.tp, 3u);
  EXPECT_DOUBLE_EQ(r.well_formed_rate(), 1.0);
}

TEST(Score, IllFormedPredictionGetsNoEduCredit) {
  const EvalReport r = score_one("B I E", "B E B");
  EXPECT_EQ(r.edus, (PRF{0, 0, 1}));
  EXPECT_DOUBLE_EQ(r.well_formed_rate(), 0.0);
  EXPECT_EQ(r.left, (PRF{1, 1, 0}));
  EXPECT_EQ(r.right, (PRF{0, 1, 1}));
}

TEST(Score, ExactSpanMatching) {
  const EvalReport r = score_one("B E BE", "B I E");
  EXPECT_EQ(r.edus, (PRF{0, 1, 2}));
  EXPECT_DOUBLE_EQ(r.edus.precision(), 0.0);
  EXPECT_DOUBLE_EQ(r.edus.recall(), 0.0);
  EXPECT_EQ(r.both, (PRF{0, 0, 1}));
  EXPECT_EQ(r.right_with_singletons, (PRF{1, 0, 1}));
  EXPECT_EQ(r.left_with_singletons, (PRF{1, 0, 1}));
}

TEST(Score, ShapeMismatch) {
  const std::vector<Sentence> gold{make_sentence({"a", "b"}, parse_labels("B E"))};
  EXPECT_THROW(score(gold, std::vector<LabelSequence>{parse_labels("BE")}), ContractError);
  EXPECT_THROW(score(gold, std::vector<LabelSequence>{}), ContractError);
}

struct RandomCase {
  std::vector<Sentence> gold;
  std::vector<LabelSequence> gold_labels;
  std::vector<LabelSequence> predicted;
};

RandomCase random_case(std::mt19937_64& rng) {
  RandomCase c;
  std::uniform_int_distribution<std::size_t> sentences(1, 6), len(1, 12);
  std::bernoulli_distribution coin(0.5);
  const std::size_t k = sentences(rng);
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t n = len(rng);
    const LabelSequence g = segments_to_labels(testing::random_segmentation(rng, n), n);
    LabelSequence p = g;
    std::uniform_int_distribution<std::size_t> at(0, n - 1);
    for (int flip = 0; flip < 2; ++flip) {
      p[at(rng)] = testing::random_labels(rng, 1)[0];
    }
    if (coin(rng)) p = repair(p);
    c.gold.push_back(make_sentence(std::vector<std::string>(n, "w"), g));
    c.gold_labels.push_back(g);
    c.predicted.push_back(p);
  }
  return c;
}

void expect_counts(const PRF& actual, const oracle::Counts& expected) {
  EXPECT_EQ(actual.tp, expected.tp);
  EXPECT_EQ(actual.fp, expected.fp);
  EXPECT_EQ(actual.fn, expected.fn);
}

TEST(Score, MatchesRecount) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const RandomCase c = random_case(rng);
    const EvalReport r = score(c.gold, c.predicted);
    const oracle::Recount o = oracle::recount(c.gold_labels, c.predicted);
    expect_counts(r.left, o.left);
    expect_counts(r.right, o.right);
    expect_counts(r.both, o.both);
    expect_counts(r.edus, o.edus);
    EXPECT_EQ(r.well_formed, o.well_formed);
    EXPECT_EQ(r.sentences, c.gold.size());
  }
}

TEST(Score, PermutationInvariant) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    RandomCase c = random_case(rng);
    const EvalReport before = score(c.gold, c.predicted);
    std::vector<std::size_t> order(c.gold.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Sentence> gold;
    std::vector<LabelSequence> pred;
    for (std::size_t i : order) {
      gold.push_back(c.gold[i]);
      pred.push_back(c.predicted[i]);
    }
    EXPECT_EQ(score(gold, pred), before);
  }
}

TEST(Folds, NearEqualAndSeeded) {
  const auto folds = assign_folds(23, 5, 9);
  ASSERT_EQ(folds.size(), 23u);
  std::vector<std::size_t> sizes(5, 0);
  for (auto f : folds) ++sizes.at(f);
  EXPECT_EQ(*std::max_element(sizes.begin(), sizes.end()) -
                *std::min_element(sizes.begin(), sizes.end()),
            1u);
  EXPECT_EQ(assign_folds(23, 5, 9), folds);
  EXPECT_NE(assign_folds(23, 5, 10), folds);
  EXPECT_THROW(assign_folds(3, 5, 0), ContractError);
  EXPECT_THROW(assign_folds(3, 1, 0), ContractError);
}

Corpus small_corpus(std::size_t docs, std::size_t sentences, std::uint64_t seed = 42) {
  SyntheticConfig config;
  config.seed = seed;
  config.documents = docs;
  config.sentences_per_document = sentences;
  return generate_synthetic(config);
}

TEST(CrossValidation, TwoIdenticalSentences) {
  const Sentence s = flatten(small_corpus(1, 1))[0];
  const Corpus docs{{"a", {s}}, {"b", {s}}};
  CrossValidationConfig config;
  config.folds = 2;
  const CrossValidationResult r = cross_validate(docs, synthetic_lexicons(), config);
  ASSERT_EQ(r.per_fold.size(), 2u);
  EXPECT_EQ(r.per_fold[0], r.per_fold[1]);
  EvalReport sum = r.per_fold[0];
  sum += r.per_fold[1];
  EXPECT_EQ(r.aggregate, sum);
}

TEST(CrossValidation, DeterministicAndMicroAveraged) {
  const Corpus docs = small_corpus(6, 5);
  CrossValidationConfig config;
  config.folds = 3;
  config.seed = 7;
  const Lexicons lex = synthetic_lexicons();
  const CrossValidationResult a = cross_validate(docs, lex, config);
  const CrossValidationResult b = cross_validate(docs, lex, config);
  EXPECT_EQ(a.aggregate, b.aggregate);
  EXPECT_EQ(a.predictions, b.predictions);
  EvalReport sum;
  for (const auto& f : a.per_fold) sum += f;
  EXPECT_EQ(a.aggregate, sum);
  EXPECT_EQ(a.aggregate.sentences, 30u);
  const auto sentences = flatten(docs);
  EXPECT_EQ(score(sentences, a.predictions), a.aggregate);
  EXPECT_EQ(format_report(a.aggregate), format_report(b.aggregate));
}

TEST(CrossValidation, RepairNeverShrinksEduRow) {
  const Corpus docs = small_corpus(8, 6);
  CrossValidationConfig config;
  config.folds = 4;
  config.seed = 3;
  const auto decisions = cross_validate_decisions(docs, synthetic_lexicons(), config);
  const auto with = score_decisions(decisions, true);
  const auto without = score_decisions(decisions, false);
  EXPECT_GE(with.aggregate.well_formed, without.aggregate.well_formed);
  EXPECT_EQ(with.aggregate.well_formed, with.aggregate.sentences);
  EXPECT_GE(with.aggregate.edus.recall(), without.aggregate.edus.recall());
}

TEST(CrossValidation, DocumentFolds) {
  const Corpus docs = small_corpus(4, 3);
  CrossValidationConfig config;
  config.folds = 2;
  config.document_folds = true;
  const auto decisions = cross_validate_decisions(docs, synthetic_lexicons(), config);
  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t s = 1; s < 3; ++s) {
      EXPECT_EQ(decisions.fold_of_sentence[d * 3 + s], decisions.fold_of_sentence[d * 3]);
    }
  }
  config.folds = 5;
  EXPECT_THROW(cross_validate(docs, synthetic_lexicons(), config), ContractError);
}

TEST(Curve, Sizes) {
  EXPECT_EQ(curve_sizes(47, 5),
            (std::vector<std::size_t>{5, 10, 15, 20, 25, 30, 35, 40, 45, 47}));
  EXPECT_EQ(curve_sizes(10, 5), (std::vector<std::size_t>{5, 10}));
  EXPECT_EQ(curve_sizes(7, 7), (std::vector<std::size_t>{7}));
  EXPECT_THROW(curve_sizes(4, 5), ContractError);
  EXPECT_THROW(curve_sizes(4, 0), ContractError);
}

TEST(Curve, FullStepEqualsCrossValidation) {
  const Corpus docs = small_corpus(4, 4);
  CrossValidationConfig config;
  config.folds = 2;
  config.seed = 5;
  const auto curve = learning_curve(docs, synthetic_lexicons(), 4, config);
  ASSERT_EQ(curve.size(), 1u);
  EXPECT_EQ(curve[0].documents, 4u);
  // The single point runs on a shuffled document order with a derived seed; the
  // pooled totals do not depend on either.
  const auto direct = cross_validate(docs, synthetic_lexicons(), config);
  EXPECT_EQ(curve[0].report.sentences, direct.aggregate.sentences);
  EXPECT_EQ(curve[0].report.edus.tp + curve[0].report.edus.fn,
            direct.aggregate.edus.tp + direct.aggregate.edus.fn);
}

TEST(Curve, DeterministicTable) {
  const Corpus docs = small_corpus(6, 3);
  CrossValidationConfig config;
  config.folds = 2;
  config.seed = 11;
  const auto a = format_curve(learning_curve(docs, synthetic_lexicons(), 2, config));
  const auto b = format_curve(learning_curve(docs, synthetic_lexicons(), 2, config));
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 4);
  EXPECT_TRUE(a.starts_with("size\tleft-F\tright-F\tedu-F\n2\t"));
}

TEST(Curve, SeparableCorpusImprovesWithData) {
  SyntheticConfig gen;
  gen.documents = 12;
  gen.sentences_per_document = 6;
  gen.marker_cue_prob = 1.0;
  gen.nesting_prob = 0.0;
  gen.chunk_noise_prob = 0.0;
  gen.singleton_prob = 0.0;
  CrossValidationConfig config;
  config.folds = 5;
  config.seed = 1;
  const auto curve = learning_curve(generate_synthetic(gen), synthetic_lexicons(), 3, config);
  ASSERT_EQ(curve.size(), 4u);
  for (std::size_t k = 1; k < curve.size(); ++k) {
    EXPECT_GE(curve[k].report.edus.f1(), curve[k - 1].report.edus.f1() - 0.02) << k;
  }
}

TEST(Report, Layout) {
  const EvalReport r = score_one("B I E", "B I E");
  const std::string text = format_report(r);
  EXPECT_TRUE(text.starts_with("Class   Recall  Precision  F-measure\nLeft "));
  EXPECT_NE(text.find("EDUs"), std::string::npos);
  EXPECT_NE(text.find("Well-formed: 1.000 (1/1 sentences)"), std::string::npos);
  const std::string tsv = format_report_tsv(r);
  EXPECT_NE(tsv.find("edus\t1\t0\t0\t1.000000\t1.000000\t1.000000\n"), std::string::npos);
}

}  // namespace
}  // namespace eduseg
