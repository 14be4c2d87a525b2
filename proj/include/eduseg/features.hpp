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

// Sparse indicator features for a token in its sentence context.
//
// Every feature is named `template[offset]=value` (offset omitted for the
// token-only templates), e.g. `pos[-1]=DET`, `depSub2=suj|obj`. The names
// are what model files store, so they must stay stable.

#ifndef EDUSEG_FEATURES_HPP_
#define EDUSEG_FEATURES_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eduseg/corpus.hpp"

namespace eduseg {

using FeatureId = std::int32_t;

// Sorted, duplicate-free ids of the active indicator features.
struct FeatureVector {
  std::vector<FeatureId> ids;

  std::size_t size() const { return ids.size(); }
  bool contains(FeatureId id) const;
};

// Bijection between feature names and dense ids 0..size()-1. Grows on
// intern() until frozen; afterwards unknown names are dropped.
class FeatureSpace {
 public:
  std::optional<FeatureId> find(const std::string& name) const;
  std::optional<FeatureId> intern(const std::string& name);

  const std::string& name(FeatureId id) const { return names_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return names_.size(); }
  bool frozen() const { return frozen_; }
  void freeze() { frozen_ = true; }

 private:
  std::unordered_map<std::string, FeatureId> ids_;
  std::vector<std::string> names_;
  bool frozen_ = false;
};

struct Lexicons {
  std::vector<std::vector<std::string>> discourse_markers;  // lowercase token sequences
  std::set<std::string> speech_verbs;                       // lowercase lemmas
};

// One marker per line, tokens separated by spaces; `#` lines and blank lines
// are skipped. Entries are lowercased and deduplicated.
std::vector<std::vector<std::string>> read_marker_lexicon(std::istream& in);
std::set<std::string> read_verb_lexicon(std::istream& in);
// Empty path means "no lexicon".
Lexicons load_lexicons(const std::string& markers_path, const std::string& verbs_path);

// Lowercases ASCII and Latin-1 supplement letters; other bytes unchanged.
std::string to_lower_utf8(std::string_view text);

// Feature names for the token at `index`, duplicate-free, in a fixed
// emission order. Throws ContractError if index is out of range.
std::vector<std::string> feature_names(const Sentence& sentence, std::size_t index,
                                       const Lexicons& lexicons);
// Names for every token of the sentence; shares per-sentence work.
std::vector<std::vector<std::string>> sentence_feature_names(const Sentence& sentence,
                                                             const Lexicons& lexicons);

// Registers unseen names while `space` is not frozen.
FeatureVector extract_features(const Sentence& sentence, std::size_t index,
                               const Lexicons& lexicons, FeatureSpace& space);
// Lookup only: unknown names are dropped.
FeatureVector extract_features(const Sentence& sentence, std::size_t index,
                               const Lexicons& lexicons, const FeatureSpace& space);

FeatureVector to_feature_vector(const std::vector<std::string>& names, FeatureSpace& space);
FeatureVector to_feature_vector(const std::vector<std::string>& names,
                                const FeatureSpace& space);

// Frozen space holding the names seen on at least `min_count` tokens.
// Ids follow first-occurrence order.
FeatureSpace build_feature_space(std::span<const Sentence> sentences, const Lexicons& lexicons,
                                 std::size_t min_count = 1);
FeatureSpace build_feature_space(const Corpus& docs, const Lexicons& lexicons,
                                 std::size_t min_count = 1);

// Feature-name prefixes of the dependency templates, which are exempt from
// the window locality bound.
bool is_dependency_feature(std::string_view name);

}  // namespace eduseg

#endif  // EDUSEG_FEATURES_HPP_
