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

#include "eduseg/corpus.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "eduseg/errors.hpp"
#include "eduseg/segment.hpp"

namespace eduseg {
namespace {

constexpr std::string_view kPlaceholder = "_";
constexpr std::size_t kColumns = 9;

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(separator, begin);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

bool is_chunk_tag(std::string_view tag) {
  if (tag.empty() || tag.front() < 'A' || tag.front() > 'Z') return false;
  for (char c : tag) {
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

char chunk_code(ChunkPosition position) {
  switch (position) {
    case ChunkPosition::Begin: return 'B';
    case ChunkPosition::Inside: return 'I';
    case ChunkPosition::End: return 'E';
    case ChunkPosition::Singleton: return 'S';
  }
  return '?';
}

class CorpusReader {
 public:
  explicit CorpusReader(std::string source) : source_(std::move(source)) {}

  Corpus read(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      consume(line);
    }
    if (in.bad()) throw IoError("error reading " + source_);
    finish_document();
    return std::move(docs_);
  }

 private:
  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw FormatError(source_, line, message);
  }

  void consume(std::string_view line) {
    if (!line.empty() && line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (body.starts_with("doc") && trim(body.substr(3)).starts_with("=")) {
        start_document(trim(trim(body.substr(3)).substr(1)));
      }
      return;
    }
    if (trim(line).empty()) {
      finish_sentence();
      return;
    }
    add_token(line);
  }

  void start_document(std::string_view id) {
    finish_document();
    if (id.empty()) fail(line_no_, "empty document id");
    if (!seen_ids_.insert(std::string(id)).second) {
      fail(line_no_, "duplicate document id '" + std::string(id) + "'");
    }
    current_ = Document{std::string(id), {}};
    header_line_ = line_no_;
  }

  void finish_document() {
    finish_sentence();
    if (!current_) return;
    if (current_->sentences.empty()) {
      fail(header_line_, "document '" + current_->id + "' has no sentences");
    }
    docs_.push_back(std::move(*current_));
    current_.reset();
  }

  void add_token(std::string_view line) {
    if (!current_) fail(line_no_, "token line before any '# doc = <id>' header");
    const auto columns = split(line, '\t');
    if (columns.size() != kColumns) {
      fail(line_no_, "expected " + std::to_string(kColumns) + " tab-separated columns, found " +
                         std::to_string(columns.size()));
    }
    Token token;
    const auto index = parse_index(columns[0]);
    if (!index || *index != tokens_.size()) {
      fail(line_no_, "token index '" + std::string(columns[0]) + "' should be " +
                         std::to_string(tokens_.size()));
    }
    token.index = *index;
    token.form = std::string(columns[1]);
    token.lemma = std::string(columns[2]);
    token.pos = std::string(columns[3]);
    token.category = std::string(columns[4]);
    if (token.form.empty() || token.lemma.empty()) fail(line_no_, "empty form or lemma");
    if (token.pos.empty() || token.category.empty()) fail(line_no_, "empty POS or category");
    token.chunk_path = parse_chunks(columns[5]);
    if (columns[6] != kPlaceholder) {
      const auto head = parse_index(columns[6]);
      if (!head) fail(line_no_, "bad head index '" + std::string(columns[6]) + "'");
      if (*head == token.index) fail(line_no_, "token is its own dependency head");
      token.head = head;
    }
    if (columns[7].empty()) fail(line_no_, "empty dependency relation");
    if (columns[7] != kPlaceholder) token.deprel = std::string(columns[7]);
    if (columns[8] != kPlaceholder) {
      const auto label = parse_label_code(columns[8]);
      if (!label) fail(line_no_, "unknown boundary label '" + std::string(columns[8]) + "'");
      token.gold = label;
    }
    tokens_.push_back(std::move(token));
    token_lines_.push_back(line_no_);
  }

  std::vector<ChunkElement> parse_chunks(std::string_view column) const {
    std::vector<ChunkElement> path;
    if (column == kPlaceholder) return path;
    for (std::string_view item : split(column, ',')) {
      const auto dash = item.rfind('-');
      if (dash == std::string_view::npos || dash + 2 != item.size()) {
        fail(line_no_, "bad chunk element '" + std::string(item) + "'");
      }
      const std::string_view tag = item.substr(0, dash);
      if (!is_chunk_tag(tag)) fail(line_no_, "bad chunk tag '" + std::string(tag) + "'");
      ChunkElement element{std::string(tag), ChunkPosition::Singleton};
      switch (item.back()) {
        case 'B': element.position = ChunkPosition::Begin; break;
        case 'I': element.position = ChunkPosition::Inside; break;
        case 'E': element.position = ChunkPosition::End; break;
        case 'S': element.position = ChunkPosition::Singleton; break;
        default:
          fail(line_no_, "unknown chunk position code '" + std::string(1, item.back()) + "'");
      }
      path.push_back(std::move(element));
    }
    return path;
  }

  void finish_sentence() {
    if (tokens_.empty()) return;
    const std::size_t n = tokens_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (tokens_[i].head && *tokens_[i].head >= n) {
        fail(token_lines_[i], "head index " + std::to_string(*tokens_[i].head) +
                                  " out of range for a sentence of " + std::to_string(n) +
                                  " tokens");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t at = i;
      for (std::size_t steps = 0; tokens_[at].head; ++steps) {
        if (steps > n) fail(token_lines_[i], "dependency cycle reachable from this token");
        at = *tokens_[at].head;
      }
    }
    Sentence sentence;
    sentence.id = current_->sentences.size();
    sentence.tokens = std::move(tokens_);
    current_->sentences.push_back(std::move(sentence));
    tokens_.clear();
    token_lines_.clear();
  }

  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t header_line_ = 0;
  Corpus docs_;
  std::optional<Document> current_;
  std::set<std::string> seen_ids_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> token_lines_;
};

}  // namespace

std::string_view label_code(BoundaryLabel label) {
  switch (label) {
    case BoundaryLabel::Begin: return "B";
    case BoundaryLabel::End: return "E";
    case BoundaryLabel::BeginEnd: return "BE";
    case BoundaryLabel::Inside: return "I";
  }
  return "?";
}

std::optional<BoundaryLabel> parse_label_code(std::string_view code) {
  for (BoundaryLabel label : kAllLabels) {
    if (label_code(label) == code) return label;
  }
  return std::nullopt;
}

std::string format_labels(const LabelSequence& labels) {
  std::string out;
  for (BoundaryLabel label : labels) {
    if (!out.empty()) out += ' ';
    out += label_code(label);
  }
  return out;
}

LabelSequence parse_labels(std::string_view codes) {
  LabelSequence labels;
  std::istringstream in{std::string(codes)};
  std::string code;
  while (in >> code) {
    const auto label = parse_label_code(code);
    if (!label) throw ContractError("unknown boundary label '" + code + "'");
    labels.push_back(*label);
  }
  return labels;
}

bool Token::strictly_chunk_internal() const {
  if (chunk_path.empty()) return false;
  for (const auto& element : chunk_path) {
    if (element.position != ChunkPosition::Inside) return false;
  }
  return true;
}

bool Sentence::annotated() const {
  for (const auto& token : tokens) {
    if (!token.gold) return false;
  }
  return true;
}

LabelSequence Sentence::gold_labels() const {
  LabelSequence labels;
  labels.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!token.gold) {
      throw ContractError("unannotated corpus: sentence " + std::to_string(id) + " token " +
                          std::to_string(token.index) + " has no boundary label");
    }
    labels.push_back(*token.gold);
  }
  return labels;
}

Corpus parse_corpus(std::istream& in, const std::string& source) {
  return CorpusReader(source).read(in);
}

Corpus parse_corpus_string(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in, source);
}

Corpus read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file " + path);
  return parse_corpus(in, path);
}

void write_corpus(std::ostream& out, const Corpus& docs) {
  for (const auto& doc : docs) {
    out << "# doc = " << doc.id << '\n';
    for (const auto& sentence : doc.sentences) {
      for (const auto& token : sentence.tokens) {
        out << token.index << '\t' << token.form << '\t' << token.lemma << '\t' << token.pos
            << '\t' << token.category << '\t';
        if (token.chunk_path.empty()) {
          out << kPlaceholder;
        } else {
          for (std::size_t k = 0; k < token.chunk_path.size(); ++k) {
            if (k > 0) out << ',';
            out << token.chunk_path[k].tag << '-' << chunk_code(token.chunk_path[k].position);
          }
        }
        out << '\t';
        if (token.head) out << *token.head; else out << kPlaceholder;
        out << '\t' << (token.deprel.empty() ? kPlaceholder : std::string_view(token.deprel))
            << '\t' << (token.gold ? label_code(*token.gold) : kPlaceholder) << '\n';
      }
      out << '\n';
    }
  }
}

std::string write_corpus_string(const Corpus& docs) {
  std::ostringstream out;
  write_corpus(out, docs);
  return out.str();
}

void write_corpus_file(const std::string& path, const Corpus& docs) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_corpus(out, docs);
  if (!out) throw IoError("error writing " + path);
}

Corpus with_labels(const Corpus& docs, const std::vector<LabelSequence>& labels) {
  Corpus out = docs;
  std::size_t k = 0;
  for (auto& doc : out) {
    for (auto& sentence : doc.sentences) {
      if (k >= labels.size() || labels[k].size() != sentence.size()) {
        throw ContractError("label sequences do not match the corpus shape at sentence " +
                            std::to_string(k));
      }
      for (std::size_t i = 0; i < sentence.size(); ++i) sentence.tokens[i].gold = labels[k][i];
      ++k;
    }
  }
  if (k != labels.size()) throw ContractError("more label sequences than corpus sentences");
  return out;
}

std::vector<Sentence> flatten(const Corpus& docs) {
  std::vector<Sentence> sentences;
  for (const auto& doc : docs) {
    sentences.insert(sentences.end(), doc.sentences.begin(), doc.sentences.end());
  }
  return sentences;
}

CorpusStats corpus_stats(const Corpus& docs) {
  CorpusStats stats;
  stats.documents = docs.size();
  for (const auto& doc : docs) {
    for (const auto& sentence : doc.sentences) {
      ++stats.sentences;
      stats.tokens += sentence.size();
      LabelSequence labels;
      try {
        labels = sentence.gold_labels();
      } catch (const ContractError&) {
        throw ContractError("unannotated corpus: document '" + doc.id + "' sentence " +
                            std::to_string(sentence.id) + " lacks boundary labels");
      }
      for (BoundaryLabel label : labels) ++stats.label_counts[label_index(label)];
      if (!is_well_formed(labels)) {
        ++stats.ill_formed_sentences;
        continue;
      }
      const Segmentation segments = labels_to_segments(labels);
      stats.segments += segments.size();
      for (std::size_t depth : segment_depths(segments)) {
        if (depth >= 2) ++stats.nested_segments;
      }
    }
  }
  return stats;
}

}  // namespace eduseg
