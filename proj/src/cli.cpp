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

#include "eduseg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "eduseg/corpus.hpp"
#include "eduseg/errors.hpp"
#include "eduseg/eval.hpp"
#include "eduseg/features.hpp"
#include "eduseg/maxent.hpp"
#include "eduseg/pipeline.hpp"
#include "eduseg/resample.hpp"
#include "eduseg/segment.hpp"
#include "eduseg/synthetic.hpp"

namespace eduseg::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string corpus;
  std::string markers;
  std::string verbs;
  std::string model;
  std::string out;
  std::string predictions;
  double l2_sigma2 = 1.0;
  int max_iterations = 500;
  double tolerance = 1e-6;
  std::size_t min_count = 1;
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::size_t step_docs = 5;
  bool no_repair = false;
  bool no_force_boundaries = false;
  bool no_resample = false;
  bool doc_folds = false;
  SyntheticConfig synthetic;

  PipelineConfig pipeline() const {
    PipelineConfig config;
    config.train.l2_sigma2 = l2_sigma2;
    config.train.max_iterations = max_iterations;
    config.train.tolerance = tolerance;
    config.min_count = min_count;
    config.resample = !no_resample;
    config.predict.force_boundaries = !no_force_boundaries;
    config.predict.repair = !no_repair;
    return config;
  }

  CrossValidationConfig cross_validation() const {
    CrossValidationConfig config;
    config.folds = folds;
    config.seed = seed;
    config.document_folds = doc_folds;
    config.pipeline = pipeline();
    return config;
  }
};

std::string number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string fixed(double value, int digits = 4) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string label_counts(const std::array<std::size_t, kNumLabels>& counts) {
  std::string out;
  for (BoundaryLabel label : kAllLabels) {
    out += '\t' + std::string(label_code(label)) + "=" + std::to_string(counts[label_index(label)]);
  }
  return out;
}

// Header echoing every parameter that shapes the command's output.
std::string header(const RunConfig& c) {
  std::ostringstream h;
  const auto kv = [&](const char* key, const std::string& value) {
    h << "# " << key << " = " << (value.empty() ? "-" : value) << '\n';
  };
  const auto flag = [](bool on) { return std::string(on ? "on" : "off"); };
  h << "# eduseg " << c.command << '\n';
  if (c.command == "generate") {
    kv("out", c.out);
    kv("seed", std::to_string(c.synthetic.seed));
    kv("docs", std::to_string(c.synthetic.documents));
    kv("sentences-per-doc", std::to_string(c.synthetic.sentences_per_document));
    kv("nesting-prob", number(c.synthetic.nesting_prob));
    kv("marker-cue-prob", number(c.synthetic.marker_cue_prob));
    kv("chunk-noise-prob", number(c.synthetic.chunk_noise_prob));
    kv("singleton-prob", number(c.synthetic.singleton_prob));
    kv("markers", c.markers);
    kv("verbs", c.verbs);
    return h.str();
  }
  kv("corpus", c.corpus);
  if (c.command == "repair" || c.command == "stats") return h.str();
  kv("markers", c.markers);
  kv("verbs", c.verbs);
  if (c.command == "predict" || c.command == "evaluate") {
    kv("model", c.model);
    if (c.command == "evaluate") kv("predictions", c.predictions);
    kv("force-boundaries", flag(!c.no_force_boundaries));
    kv("repair", flag(!c.no_repair));
    return h.str();
  }
  if (c.command == "train") kv("model", c.model);
  kv("l2-sigma2", number(c.l2_sigma2));
  kv("max-iterations", std::to_string(c.max_iterations));
  kv("tolerance", number(c.tolerance));
  kv("min-count", std::to_string(c.min_count));
  kv("resample", flag(!c.no_resample));
  if (c.command == "train") return h.str();
  kv("force-boundaries", flag(!c.no_force_boundaries));
  kv("repair", flag(!c.no_repair));
  kv("folds", std::to_string(c.folds));
  kv("seed", std::to_string(c.seed));
  kv("doc-folds", flag(c.doc_folds));
  if (c.command == "curve") kv("step-docs", std::to_string(c.step_docs));
  return h.str();
}

void check_output_path(const std::string& path) {
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw IoError("output directory does not exist: " + parent.string());
  }
}

void check_input_path(const std::string& path) {
  if (path.empty()) return;
  if (!std::filesystem::is_regular_file(path)) throw IoError("no such file: " + path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write " + path);
  file << text;
  if (!file) throw IoError("error writing " + path);
}

// Writes the report to --out when given, else to the console stream.
void emit(const RunConfig& c, std::ostream& console, const std::string& text) {
  if (c.out.empty()) {
    console << text;
  } else {
    write_text(c.out, text);
  }
}

std::string render_all(const std::vector<Sentence>& sentences,
                       const std::vector<LabelSequence>& labels) {
  std::string text;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    text += render_brackets(sentences[s], labels[s]) + '\n';
  }
  return text;
}

int cmd_train(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const Lexicons lexicons = load_lexicons(c.markers, c.verbs);
  const std::vector<Sentence> sentences = flatten(docs);
  const TrainedSegmenter trained = train_segmenter(sentences, lexicons, c.pipeline());
  save_model_file(c.model, trained.training.model);

  std::ostringstream log;
  log << header(c);
  std::size_t tokens = 0;
  for (const auto& s : sentences) tokens += s.size();
  log << "sentences\t" << sentences.size() << '\n'
      << "tokens\t" << tokens << '\n'
      << "corpus_labels" << label_counts(trained.corpus_label_counts) << '\n'
      << "filter\tkept=" << trained.filter.kept
      << "\tdropped_sentence_boundary=" << trained.filter.dropped_sentence_boundary
      << "\tdropped_chunk_internal=" << trained.filter.dropped_chunk_internal << '\n'
      << "kept_labels" << label_counts(trained.filter.kept_per_label) << '\n'
      << "features\t" << trained.training.model.num_features() << '\n'
      << "iterations\t" << trained.training.iterations << '\n'
      << "final_objective\t" << number(trained.training.objective_trace.back()) << '\n'
      << "gradient_max_norm\t" << number(trained.training.gradient_max_norm) << '\n'
      << "converged\t" << (trained.training.converged ? "yes" : "no") << '\n';
  emit(c, out, log.str());
  return kOk;
}

std::vector<LabelSequence> predict_all(const RunConfig& c, const std::vector<Sentence>& sentences) {
  const MaxEntModel model = load_model_file(c.model);
  const Lexicons lexicons = load_lexicons(c.markers, c.verbs);
  PredictOptions options;
  options.force_boundaries = !c.no_force_boundaries;
  options.repair = !c.no_repair;
  std::vector<LabelSequence> labels;
  labels.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    labels.push_back(predict_sentence(model, sentence, lexicons, options));
  }
  return labels;
}

std::string well_formed_summary(const std::vector<LabelSequence>& labels) {
  std::size_t ok = 0;
  for (const auto& l : labels) ok += is_well_formed(l) ? 1 : 0;
  const double rate = labels.empty() ? 1.0 : static_cast<double>(ok) / labels.size();
  return "sentences\t" + std::to_string(labels.size()) + "\twell_formed\t" + std::to_string(ok) +
         "\trate\t" + fixed(rate) + '\n';
}

int cmd_predict(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const std::vector<Sentence> sentences = flatten(docs);
  const std::vector<LabelSequence> labels = predict_all(c, sentences);
  write_corpus_file(c.out, with_labels(docs, labels));
  write_text(c.out + ".brackets", render_all(sentences, labels));
  out << header(c) << well_formed_summary(labels);
  return kOk;
}

int cmd_evaluate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Corpus gold_docs = read_corpus_file(c.corpus);
  const std::vector<Sentence> gold = flatten(gold_docs);
  std::vector<LabelSequence> labels;
  if (!c.predictions.empty()) {
    const std::vector<Sentence> predicted = flatten(read_corpus_file(c.predictions));
    for (const auto& sentence : predicted) labels.push_back(sentence.gold_labels());
  } else if (!c.model.empty()) {
    labels = predict_all(c, gold);
  } else {
    err << "evaluate needs --model or --predictions\n";
    return kUsage;
  }
  const EvalReport report = score(gold, labels);
  emit(c, out, header(c) + format_report(report) + "\n" + format_report_tsv(report));
  return kOk;
}

std::string fold_lines(const CrossValidationResult& result) {
  std::string text = "fold\tleft-F\tright-F\tedu-F\twell-formed\n";
  for (std::size_t f = 0; f < result.per_fold.size(); ++f) {
    const auto& r = result.per_fold[f];
    text += std::to_string(f) + '\t' + fixed(r.left.f1()) + '\t' + fixed(r.right.f1()) + '\t' +
            fixed(r.edus.f1()) + '\t' + fixed(r.well_formed_rate()) + '\n';
  }
  return text;
}

int cmd_cv(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const Lexicons lexicons = load_lexicons(c.markers, c.verbs);
  const CrossValidationResult result = cross_validate(docs, lexicons, c.cross_validation());
  emit(c, out, header(c) + format_report(result.aggregate) + "\n" +
                   format_report_tsv(result.aggregate) + "\n" + fold_lines(result));
  return kOk;
}

int cmd_curve(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const Lexicons lexicons = load_lexicons(c.markers, c.verbs);
  const auto curve = learning_curve(docs, lexicons, c.step_docs, c.cross_validation());
  emit(c, out, header(c) + format_curve(curve));
  return kOk;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const Corpus docs = generate_synthetic(c.synthetic);
  write_corpus_file(c.out, docs);
  const Lexicons lexicons = synthetic_lexicons();
  if (!c.markers.empty()) {
    std::ostringstream text;
    write_marker_lexicon(text, lexicons);
    write_text(c.markers, text.str());
  }
  if (!c.verbs.empty()) {
    std::ostringstream text;
    write_verb_lexicon(text, lexicons);
    write_text(c.verbs, text.str());
  }
  const CorpusStats stats = corpus_stats(docs);
  out << header(c) << "documents\t" << stats.documents << "\nsentences\t" << stats.sentences
      << "\ntokens\t" << stats.tokens << "\nsegments\t" << stats.segments
      << "\nnested_proportion\t" << fixed(stats.nested_proportion()) << '\n';
  return kOk;
}

int cmd_repair(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const std::vector<Sentence> sentences = flatten(docs);
  std::vector<LabelSequence> before, after;
  for (const auto& sentence : sentences) {
    before.push_back(sentence.gold_labels());
    after.push_back(repair(before.back()));
  }
  write_corpus_file(c.out, with_labels(docs, after));
  write_text(c.out + ".brackets", render_all(sentences, after));
  out << header(c) << "before\t" << well_formed_summary(before) << "after\t"
      << well_formed_summary(after);
  return kOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  const Corpus docs = read_corpus_file(c.corpus);
  const CorpusStats stats = corpus_stats(docs);
  const std::vector<Sentence> sentences = flatten(docs);
  const InstanceFilterReport filter = filter_training(sentences).report;
  std::ostringstream text;
  text << header(c) << "documents\t" << stats.documents << "\nsentences\t" << stats.sentences
       << "\ntokens\t" << stats.tokens << "\nlabels" << label_counts(stats.label_counts)
       << "\nsegments\t" << stats.segments << "\nsegments_per_document\t"
       << fixed(stats.segments_per_document(), 2) << "\nnested_segments\t" << stats.nested_segments
       << "\nnested_proportion\t" << fixed(stats.nested_proportion())
       << "\nill_formed_sentences\t" << stats.ill_formed_sentences << "\nfilter\tkept="
       << filter.kept << "\tdropped_sentence_boundary=" << filter.dropped_sentence_boundary
       << "\tdropped_chunk_internal=" << filter.dropped_chunk_internal << "\nkept_labels"
       << label_counts(filter.kept_per_label) << '\n';
  emit(c, out, text.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Nested discourse segmentation toolkit"};
  app.require_subcommand(1);

  const auto add_lexicons = [&](CLI::App* sub) {
    sub->add_option("--markers", c.markers, "Discourse marker lexicon");
    sub->add_option("--verbs", c.verbs, "Speech-report verb lexicon");
  };
  const auto add_training = [&](CLI::App* sub) {
    sub->add_option("--l2-sigma2", c.l2_sigma2, "Gaussian prior variance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iterations", c.max_iterations, "Optimizer iteration cap")->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance", c.tolerance, "Relative objective change to stop at")->check(CLI::PositiveNumber);
    sub->add_option("--min-count", c.min_count, "Feature frequency cutoff")->check(CLI::PositiveNumber);
    sub->add_flag("--no-resample", c.no_resample, "Train on every token");
  };
  const auto add_predicting = [&](CLI::App* sub) {
    sub->add_flag("--no-repair", c.no_repair, "Skip bracket repair");
    sub->add_flag("--no-force-boundaries", c.no_force_boundaries, "Skip forced labels");
  };
  const auto add_folds = [&](CLI::App* sub) {
    sub->add_option("--folds", c.folds, "Number of folds")->check(CLI::Range(2, 1000000));
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_flag("--doc-folds", c.doc_folds, "Fold by document instead of sentence");
  };

  auto* train = app.add_subcommand("train", "Train a model");
  train->add_option("--corpus", c.corpus, "Annotated corpus")->required();
  train->add_option("--model", c.model, "Model file to write")->required();
  train->add_option("--out", c.out, "Training log file (default: stdout)");
  add_lexicons(train);
  add_training(train);

  auto* predict = app.add_subcommand("predict", "Segment a corpus with a model");
  predict->add_option("--corpus", c.corpus, "Input corpus")->required();
  predict->add_option("--model", c.model, "Model file")->required();
  predict->add_option("--out", c.out, "Prediction file")->required();
  add_lexicons(predict);
  add_predicting(predict);

  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold labels");
  evaluate->add_option("--corpus", c.corpus, "Gold corpus")->required();
  evaluate->add_option("--model", c.model, "Model to predict with");
  evaluate->add_option("--predictions", c.predictions, "Prediction file to score");
  evaluate->add_option("--out", c.out, "Report file (default: stdout)");
  add_lexicons(evaluate);
  add_predicting(evaluate);

  auto* cv = app.add_subcommand("cv", "Cross-validate the full pipeline");
  auto* curve = app.add_subcommand("curve", "Learning curve over nested document subsets");
  for (auto* sub : {cv, curve}) {
    sub->add_option("--corpus", c.corpus, "Annotated corpus")->required();
    sub->add_option("--out", c.out, "Report file (default: stdout)");
    add_lexicons(sub);
    add_training(sub);
    add_predicting(sub);
    add_folds(sub);
  }
  curve->add_option("--step-docs", c.step_docs, "Documents added per step")->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Write a synthetic annotated corpus");
  generate->add_option("--out", c.out, "Corpus file to write")->required();
  generate->add_option("--markers", c.markers, "Also write the marker lexicon here");
  generate->add_option("--verbs", c.verbs, "Also write the verb lexicon here");
  generate->add_option("--seed", c.synthetic.seed, "Random seed");
  generate->add_option("--docs", c.synthetic.documents, "Number of documents");
  generate->add_option("--sentences-per-doc", c.synthetic.sentences_per_document, "Sentences per document");
  generate->add_option("--nesting-prob", c.synthetic.nesting_prob, "Nested segment probability");
  generate->add_option("--marker-cue-prob", c.synthetic.marker_cue_prob, "Connective cue probability");
  generate->add_option("--chunk-noise-prob", c.synthetic.chunk_noise_prob, "Chunker noise probability");
  generate->add_option("--singleton-prob", c.synthetic.singleton_prob, "Single-token segment probability");

  auto* repair_cmd = app.add_subcommand("repair", "Repair the labels of a prediction file");
  repair_cmd->add_option("--corpus", c.corpus, "Labeled corpus")->required();
  repair_cmd->add_option("--out", c.out, "Repaired corpus file")->required();

  auto* stats = app.add_subcommand("stats", "Corpus statistics and resampling counts");
  stats->add_option("--corpus", c.corpus, "Annotated corpus")->required();
  stats->add_option("--out", c.out, "Report file (default: stdout)");

  std::vector<const char*> argv{"eduseg"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    const bool writes_lexicons = c.command == "generate";
    const bool writes_model = c.command == "train";
    for (const auto* path : {&c.corpus, &c.predictions}) check_input_path(*path);
    if (!writes_model) check_input_path(c.model);
    if (!writes_lexicons) {
      check_input_path(c.markers);
      check_input_path(c.verbs);
    }
    check_output_path(c.out);
    if (writes_model) check_output_path(c.model);
    if (writes_lexicons) {
      check_output_path(c.markers);
      check_output_path(c.verbs);
    }
    if (c.command == "train") return cmd_train(c, out);
    if (c.command == "predict") return cmd_predict(c, out);
    if (c.command == "evaluate") return cmd_evaluate(c, out, err);
    if (c.command == "cv") return cmd_cv(c, out);
    if (c.command == "curve") return cmd_curve(c, out);
    if (c.command == "generate") return cmd_generate(c, out);
    if (c.command == "repair") return cmd_repair(c, out);
    if (c.command == "stats") return cmd_stats(c, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFormatError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kContractError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace eduseg::cli
