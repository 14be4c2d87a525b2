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

#include "eduseg/features.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "eduseg/errors.hpp"

namespace eduseg {
namespace {

constexpr int kWindow = 3;
constexpr std::size_t kMaxNgram = 6;
constexpr std::size_t kDepPathLimit = 3;
constexpr std::string_view kRootRel = "ROOT";

std::string offset_name(std::string_view templ, int offset) {
  return std::string(templ) + "[" + std::to_string(offset) + "]=";
}

// Offset 0 of the windowed position and chunk templates carries no suffix.
std::string windowed_name(std::string_view templ, int offset) {
  if (offset == 0) return std::string(templ) + "=";
  return offset_name(templ, offset);
}

std::string join(const std::vector<std::string>& parts, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t k = begin; k < end; ++k) {
    if (k > begin) out += '|';
    out += parts[k];
  }
  return out;
}

std::string innermost_tag(const Token& token) {
  return token.chunk_path.empty() ? std::string("O") : token.chunk_path.front().tag;
}

std::string projection_bucket(std::size_t count) {
  return count >= 2 ? "2+" : std::to_string(count);
}

class SentenceFeaturizer {
 public:
  SentenceFeaturizer(const Sentence& sentence, const Lexicons& lexicons)
      : sentence_(sentence), lexicons_(lexicons) {
    const std::size_t n = sentence.size();
    lower_forms_.reserve(n);
    for (const auto& token : sentence.tokens) lower_forms_.push_back(to_lower_utf8(token.form));
    marker_start_.assign(n, false);
    marker_in_.assign(n, false);
    for (std::size_t start = 0; start < n; ++start) {
      const std::size_t length = longest_marker_at(start);
      if (length == 0) continue;
      marker_start_[start] = true;
      std::fill_n(marker_in_.begin() + static_cast<std::ptrdiff_t>(start), length, true);
    }
    inbound_.resize(n);
    for (const auto& token : sentence.tokens) {
      if (!token.head) continue;
      auto& rels = inbound_[*token.head];
      const std::string rel = token.deprel.empty() ? std::string("_") : token.deprel;
      if (std::find(rels.begin(), rels.end(), rel) == rels.end()) rels.push_back(rel);
    }
  }

  std::vector<std::string> names(std::size_t i) const {
    std::vector<std::string> out;
    out.reserve(160);
    const auto& tokens = sentence_.tokens;
    const std::size_t n = tokens.size();
    const Token& token = tokens[i];

    // Atomic token templates over the +-3 window.
    for (int offset = -kWindow; offset <= kWindow; ++offset) {
      const auto j = static_cast<std::ptrdiff_t>(i) + offset;
      if (j < 0 || j >= static_cast<std::ptrdiff_t>(n)) {
        out.push_back(offset_name("pad", offset) + "1");
        continue;
      }
      const Token& other = tokens[static_cast<std::size_t>(j)];
      out.push_back(offset_name("lem", offset) + other.lemma);
      out.push_back(offset_name("pos", offset) + other.pos);
      out.push_back(offset_name("cat", offset) + other.category);
      const auto at = static_cast<std::size_t>(j);
      out.push_back(windowed_name("distL", offset) + std::to_string(quantize(at + 1, n)));
      out.push_back(windowed_name("distR", offset) + std::to_string(quantize(n - at, n)));
      if (!other.chunk_path.empty()) {
        if (other.chunk_path.front().starts()) out.push_back(windowed_name("chunkStart", offset) + "1");
        if (other.chunk_path.front().ends()) out.push_back(windowed_name("chunkEnd", offset) + "1");
      }
    }

    if (marker_start_[i]) out.emplace_back("markerStart=1");
    if (marker_in_[i]) out.emplace_back("markerIn=1");
    if (lexicons_.speech_verbs.contains(to_lower_utf8(token.lemma))) {
      out.emplace_back("speechVerb=1");
    }

    // Relation path toward the root.
    std::vector<std::string> path;
    for (std::optional<std::size_t> at = i; at && path.size() < kDepPathLimit;) {
      const Token& step = tokens[*at];
      if (!step.head) {
        path.emplace_back(kRootRel);
        break;
      }
      path.push_back(step.deprel.empty() ? std::string("_") : step.deprel);
      at = step.head;
    }
    out.push_back("depPath=" + join(path, 0, path.size()));
    for (std::size_t k = 1; k <= path.size(); ++k) {
      out.push_back("depSub" + std::to_string(k) + "=" + join(path, 0, k));
    }
    if (inbound_[i].empty()) {
      out.emplace_back("depIn=<none>");
    } else {
      for (const auto& rel : inbound_[i]) out.push_back("depIn=" + rel);
    }

    for (const char* type : {"NP", "VP", "PP"}) {
      std::size_t start = 0, middle = 0, end = 0;
      for (const auto& element : token.chunk_path) {
        if (element.tag != type) continue;
        if (element.starts()) ++start;
        if (element.ends()) ++end;
        if (element.position == ChunkPosition::Inside) ++middle;
      }
      const std::string prefix = std::string("proj[") + type;
      out.push_back(prefix + ".start]=" + projection_bucket(start));
      out.push_back(prefix + ".middle]=" + projection_bucket(middle));
      out.push_back(prefix + ".end]=" + projection_bucket(end));
    }

    // Lemma and POS trigrams on either side.
    std::vector<std::string> lemmas, tags;
    for (int offset = -kWindow; offset < 0; ++offset) push_context(i, offset, "<s>", lemmas, tags);
    out.push_back("lem3[-]=" + join(lemmas, 0, lemmas.size()));
    out.push_back("pos3[-]=" + join(tags, 0, tags.size()));
    lemmas.clear();
    tags.clear();
    for (int offset = 1; offset <= kWindow; ++offset) push_context(i, offset, "</s>", lemmas, tags);
    out.push_back("lem3[+]=" + join(lemmas, 0, lemmas.size()));
    out.push_back("pos3[+]=" + join(tags, 0, tags.size()));

    if (token.chunk_path.empty()) {
      out.emplace_back("chunkSeq=<none>");
    } else {
      std::string seq;
      for (const auto& element : token.chunk_path) {
        if (!seq.empty()) seq += '|';
        seq += element.tag;
      }
      out.push_back("chunkSeq=" + seq);
    }

    // Every in-sentence n-gram (2..6) covering the token.
    for (std::size_t k = 2; k <= kMaxNgram && k <= n; ++k) {
      const std::size_t first = i + 1 >= k ? i + 1 - k : 0;
      const std::size_t last = std::min(i, n - k);
      for (std::size_t s = first; s <= last; ++s) {
        std::string lem, pos, chk;
        for (std::size_t t = s; t < s + k; ++t) {
          if (t > s) {
            lem += '|';
            pos += '|';
            chk += '|';
          }
          lem += tokens[t].lemma;
          pos += tokens[t].pos;
          chk += innermost_tag(tokens[t]);
        }
        const std::string key = "[" + std::to_string(static_cast<std::ptrdiff_t>(s) -
                                                     static_cast<std::ptrdiff_t>(i)) +
                                "," + std::to_string(k) + "]=";
        out.push_back("lemNg" + key + lem);
        out.push_back("posNg" + key + pos);
        out.push_back("chkNg" + key + chk);
      }
    }

    std::unordered_set<std::string> seen;
    seen.reserve(out.size() * 2);
    std::erase_if(out, [&](const std::string& name) { return !seen.insert(name).second; });
    return out;
  }

 private:
  static std::size_t quantize(std::size_t numerator, std::size_t n) {
    return (100 * numerator + n - 1) / n;
  }

  std::size_t longest_marker_at(std::size_t start) const {
    std::size_t best = 0;
    for (const auto& marker : lexicons_.discourse_markers) {
      if (marker.size() <= best || start + marker.size() > lower_forms_.size()) continue;
      if (std::equal(marker.begin(), marker.end(),
                     lower_forms_.begin() + static_cast<std::ptrdiff_t>(start))) {
        best = marker.size();
      }
    }
    return best;
  }

  void push_context(std::size_t i, int offset, const char* padding, std::vector<std::string>& lemmas,
                    std::vector<std::string>& tags) const {
    const auto j = static_cast<std::ptrdiff_t>(i) + offset;
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(sentence_.size())) {
      lemmas.emplace_back(padding);
      tags.emplace_back(padding);
      return;
    }
    lemmas.push_back(sentence_.tokens[static_cast<std::size_t>(j)].lemma);
    tags.push_back(sentence_.tokens[static_cast<std::size_t>(j)].pos);
  }

  const Sentence& sentence_;
  const Lexicons& lexicons_;
  std::vector<std::string> lower_forms_;
  std::vector<bool> marker_start_;
  std::vector<bool> marker_in_;
  std::vector<std::vector<std::string>> inbound_;
};

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

FeatureVector sorted_unique(std::vector<FeatureId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return FeatureVector{std::move(ids)};
}

}  // namespace

bool FeatureVector::contains(FeatureId id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

std::optional<FeatureId> FeatureSpace::find(const std::string& name) const {
  const auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<FeatureId> FeatureSpace::intern(const std::string& name) {
  if (const auto id = find(name)) return id;
  if (frozen_) return std::nullopt;
  const auto id = static_cast<FeatureId>(names_.size());
  ids_.emplace(name, id);
  names_.push_back(name);
  return id;
}

std::string to_lower_utf8(std::string_view text) {
  std::string out(text);
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto byte = static_cast<unsigned char>(out[k]);
    if (byte >= 'A' && byte <= 'Z') {
      out[k] = static_cast<char>(byte + 32);
    } else if (byte == 0xC3 && k + 1 < out.size()) {
      const auto next = static_cast<unsigned char>(out[k + 1]);
      // U+00C0..U+00DE map to U+00E0..U+00FE, except the multiplication sign.
      if (next >= 0x80 && next <= 0x9E && next != 0x97) out[k + 1] = static_cast<char>(next + 0x20);
      ++k;
    }
  }
  return out;
}

std::vector<std::vector<std::string>> read_marker_lexicon(std::istream& in) {
  std::vector<std::vector<std::string>> markers;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream words{to_lower_utf8(body)};
    std::vector<std::string> marker;
    for (std::string word; words >> word;) marker.push_back(word);
    if (std::find(markers.begin(), markers.end(), marker) == markers.end()) {
      markers.push_back(std::move(marker));
    }
  }
  return markers;
}

std::set<std::string> read_verb_lexicon(std::istream& in) {
  std::set<std::string> verbs;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    verbs.insert(to_lower_utf8(body));
  }
  return verbs;
}

Lexicons load_lexicons(const std::string& markers_path, const std::string& verbs_path) {
  Lexicons lexicons;
  if (!markers_path.empty()) {
    std::ifstream in(markers_path);
    if (!in) throw IoError("cannot open marker lexicon " + markers_path);
    lexicons.discourse_markers = read_marker_lexicon(in);
  }
  if (!verbs_path.empty()) {
    std::ifstream in(verbs_path);
    if (!in) throw IoError("cannot open verb lexicon " + verbs_path);
    lexicons.speech_verbs = read_verb_lexicon(in);
  }
  return lexicons;
}

std::vector<std::string> feature_names(const Sentence& sentence, std::size_t index,
                                       const Lexicons& lexicons) {
  if (index >= sentence.size()) {
    throw ContractError("token index " + std::to_string(index) + " out of range for a sentence of " +
                        std::to_string(sentence.size()) + " tokens");
  }
  return SentenceFeaturizer(sentence, lexicons).names(index);
}

std::vector<std::vector<std::string>> sentence_feature_names(const Sentence& sentence,
                                                             const Lexicons& lexicons) {
  const SentenceFeaturizer featurizer(sentence, lexicons);
  std::vector<std::vector<std::string>> out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) out.push_back(featurizer.names(i));
  return out;
}

FeatureVector to_feature_vector(const std::vector<std::string>& names, FeatureSpace& space) {
  std::vector<FeatureId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    if (const auto id = space.intern(name)) ids.push_back(*id);
  }
  return sorted_unique(std::move(ids));
}

FeatureVector to_feature_vector(const std::vector<std::string>& names,
                                const FeatureSpace& space) {
  std::vector<FeatureId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    if (const auto id = space.find(name)) ids.push_back(*id);
  }
  return sorted_unique(std::move(ids));
}

FeatureVector extract_features(const Sentence& sentence, std::size_t index,
                               const Lexicons& lexicons, FeatureSpace& space) {
  return to_feature_vector(feature_names(sentence, index, lexicons), space);
}

FeatureVector extract_features(const Sentence& sentence, std::size_t index,
                               const Lexicons& lexicons, const FeatureSpace& space) {
  return to_feature_vector(feature_names(sentence, index, lexicons), space);
}

FeatureSpace build_feature_space(std::span<const Sentence> sentences, const Lexicons& lexicons,
                                 std::size_t min_count) {
  if (min_count == 0) throw ContractError("min_count must be at least 1");
  std::unordered_map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (const auto& sentence : sentences) {
    for (auto& names : sentence_feature_names(sentence, lexicons)) {
      for (auto& name : names) {
        auto [it, inserted] = counts.try_emplace(name, 0);
        if (inserted) order.push_back(name);
        ++it->second;
      }
    }
  }
  FeatureSpace space;
  for (const auto& name : order) {
    if (counts[name] >= min_count) space.intern(name);
  }
  space.freeze();
  return space;
}

FeatureSpace build_feature_space(const Corpus& docs, const Lexicons& lexicons,
                                 std::size_t min_count) {
  const std::vector<Sentence> sentences = flatten(docs);
  return build_feature_space(std::span<const Sentence>(sentences), lexicons, min_count);
}

bool is_dependency_feature(std::string_view name) {
  return name.starts_with("depPath=") || name.starts_with("depSub") || name.starts_with("depIn=");
}

}  // namespace eduseg
