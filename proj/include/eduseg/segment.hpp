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

// Label-sequence algebra over one sentence: well-formedness, the two-pass
// bracket repair, and conversion to and from nested segment sets.

#ifndef EDUSEG_SEGMENT_HPP_
#define EDUSEG_SEGMENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eduseg/corpus.hpp"

namespace eduseg {

// Inclusive token span.
struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;

  bool contains(const Segment& other) const {
    return start <= other.start && other.end <= end;
  }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

// Segments ordered by start; by construction starts are distinct.
using Segmentation = std::vector<Segment>;

enum class Violation { UncoveredToken, UnmatchedEnd, UnclosedBegin };

const char* violation_name(Violation kind);

struct WellFormedness {
  struct Failure {
    std::size_t token = 0;
    Violation kind = Violation::UncoveredToken;
  };
  std::optional<Failure> first_violation;

  bool ok() const { return !first_violation.has_value(); }
};

WellFormedness check_well_formed(const LabelSequence& labels);

inline bool is_well_formed(const LabelSequence& labels) {
  return check_well_formed(labels).ok();
}

// One left-to-right pass that opens a segment at every stranded token, then
// one right-to-left pass that closes the remaining open segments. Identity on
// well-formed input.
LabelSequence repair(const LabelSequence& labels);

// Throws ContractError echoing the violation when labels are ill-formed.
Segmentation labels_to_segments(const LabelSequence& labels);

// Throws ContractError naming the offending segments when `segments` is not
// a valid segmentation of a sentence of `length` tokens.
LabelSequence segments_to_labels(const Segmentation& segments, std::size_t length);

// Nesting depth of every segment (1 = top level), aligned with `segments`.
std::vector<std::size_t> segment_depths(const Segmentation& segments);

// Forms interleaved with brackets derived from the labels, e.g.
// "[ Ces pièces , [ mondialement connues , ] ... ]". Works on ill-formed
// sequences too.
std::string render_brackets(const Sentence& sentence, const LabelSequence& labels);

}  // namespace eduseg

#endif  // EDUSEG_SEGMENT_HPP_
