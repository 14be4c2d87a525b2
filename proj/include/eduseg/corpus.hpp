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

// Annotated corpus data model and its tab-separated file format.
//
// One token per line, nine tab-separated columns:
//
//   INDEX FORM LEMMA POS CAT CHUNKS HEAD DEPREL BOUNDARY
//
// CHUNKS is `_` or a comma-separated innermost-first list of TAG-P with
// P in {B,I,E,S}. HEAD and DEPREL use `_` for ROOT. BOUNDARY is one of
// B, E, BE, I, or `_` when unannotated. A blank line ends a sentence and
// `# doc = <id>` starts a new document; other `#` lines are comments.

#ifndef EDUSEG_CORPUS_HPP_
#define EDUSEG_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eduseg {

// Per-token discourse boundary outcome. The numeric order is the model's
// fixed label order and the decoder's tie-break order.
enum class BoundaryLabel : std::uint8_t { Begin = 0, End = 1, BeginEnd = 2, Inside = 3 };

inline constexpr std::size_t kNumLabels = 4;
inline constexpr std::array<BoundaryLabel, kNumLabels> kAllLabels = {
    BoundaryLabel::Begin, BoundaryLabel::End, BoundaryLabel::BeginEnd,
    BoundaryLabel::Inside};

using LabelSequence = std::vector<BoundaryLabel>;

constexpr std::size_t label_index(BoundaryLabel label) {
  return static_cast<std::size_t>(label);
}

// "B", "E", "BE", "I".
std::string_view label_code(BoundaryLabel label);
std::optional<BoundaryLabel> parse_label_code(std::string_view code);

// Space-separated codes, e.g. "B I E".
std::string format_labels(const LabelSequence& labels);
// Inverse of format_labels; throws ContractError on unknown codes.
LabelSequence parse_labels(std::string_view codes);

enum class ChunkPosition : std::uint8_t { Begin, Inside, End, Singleton };

struct ChunkElement {
  std::string tag;
  ChunkPosition position = ChunkPosition::Singleton;

  bool starts() const {
    return position == ChunkPosition::Begin || position == ChunkPosition::Singleton;
  }
  bool ends() const {
    return position == ChunkPosition::End || position == ChunkPosition::Singleton;
  }

  friend bool operator==(const ChunkElement&, const ChunkElement&) = default;
};

struct Token {
  std::size_t index = 0;
  std::string form;
  std::string lemma;
  std::string pos;
  std::string category;
  std::vector<ChunkElement> chunk_path;  // innermost first
  std::optional<std::size_t> head;       // nullopt = ROOT
  std::string deprel;                    // empty = ROOT placeholder
  std::optional<BoundaryLabel> gold;

  // Non-empty chunk path with every level strictly inside its chunk.
  bool strictly_chunk_internal() const;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t id = 0;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool annotated() const;
  // Gold labels; throws ContractError if any token is unannotated.
  LabelSequence gold_labels() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  friend bool operator==(const Document&, const Document&) = default;
};

using Corpus = std::vector<Document>;

// Parses a whole corpus stream. `source` names the stream in error
// messages. Aborts on the first error with a FormatError.
Corpus parse_corpus(std::istream& in, const std::string& source = "<input>");
Corpus parse_corpus_string(std::string_view text, const std::string& source = "<input>");
Corpus read_corpus_file(const std::string& path);

void write_corpus(std::ostream& out, const Corpus& docs);
std::string write_corpus_string(const Corpus& docs);
void write_corpus_file(const std::string& path, const Corpus& docs);

// Copies of `docs` with the boundary column replaced by `labels`, given in
// corpus sentence order.
Corpus with_labels(const Corpus& docs, const std::vector<LabelSequence>& labels);

// All sentences in corpus order.
std::vector<Sentence> flatten(const Corpus& docs);

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::array<std::size_t, kNumLabels> label_counts{};
  std::size_t segments = 0;
  std::size_t nested_segments = 0;  // contained in another segment
  std::size_t ill_formed_sentences = 0;

  double nested_proportion() const {
    return segments == 0 ? 0.0 : static_cast<double>(nested_segments) / segments;
  }
  double segments_per_document() const {
    return documents == 0 ? 0.0 : static_cast<double>(segments) / documents;
  }
};

// Throws ContractError("unannotated corpus ...") when a token lacks a gold
// label. Ill-formed gold sentences are counted, and contribute no segments.
CorpusStats corpus_stats(const Corpus& docs);

}  // namespace eduseg

#endif  // EDUSEG_CORPUS_HPP_
