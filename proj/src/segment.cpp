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

#include "eduseg/segment.hpp"

#include <algorithm>

#include "eduseg/errors.hpp"

namespace eduseg {
namespace {

std::string describe(const Segment& s) {
  return "(" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

}  // namespace

const char* violation_name(Violation kind) {
  switch (kind) {
    case Violation::UncoveredToken: return "UncoveredToken";
    case Violation::UnmatchedEnd: return "UnmatchedEnd";
    case Violation::UnclosedBegin: return "UnclosedBegin";
  }
  return "?";
}

WellFormedness check_well_formed(const LabelSequence& labels) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    switch (labels[i]) {
      case BoundaryLabel::Begin:
        open.push_back(i);
        break;
      case BoundaryLabel::BeginEnd:
        break;
      case BoundaryLabel::Inside:
        if (open.empty()) return {WellFormedness::Failure{i, Violation::UncoveredToken}};
        break;
      case BoundaryLabel::End:
        if (open.empty()) return {WellFormedness::Failure{i, Violation::UnmatchedEnd}};
        open.pop_back();
        break;
    }
  }
  if (!open.empty()) return {WellFormedness::Failure{open.front(), Violation::UnclosedBegin}};
  return {};
}

LabelSequence repair(const LabelSequence& labels) {
  LabelSequence out = labels;
  // Left to right: a stranded token opens a segment.
  std::size_t depth = 0;
  for (auto& label : out) {
    switch (label) {
      case BoundaryLabel::Begin:
        ++depth;
        break;
      case BoundaryLabel::BeginEnd:
        break;
      case BoundaryLabel::Inside:
      case BoundaryLabel::End:
        if (depth == 0) {
          label = BoundaryLabel::Begin;
          depth = 1;
        } else if (label == BoundaryLabel::End) {
          --depth;
        }
        break;
    }
  }
  // Right to left: close what is still open.
  depth = 0;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    auto& label = *it;
    switch (label) {
      case BoundaryLabel::End:
        ++depth;
        break;
      case BoundaryLabel::BeginEnd:
        break;
      case BoundaryLabel::Inside:
        if (depth == 0) {
          label = BoundaryLabel::End;
          depth = 1;
        }
        break;
      case BoundaryLabel::Begin:
        if (depth == 0) {
          label = BoundaryLabel::BeginEnd;
        } else {
          --depth;
        }
        break;
    }
  }
  return out;
}

Segmentation labels_to_segments(const LabelSequence& labels) {
  const WellFormedness check = check_well_formed(labels);
  if (!check.ok()) {
    throw ContractError(std::string("ill-formed label sequence: ") +
                        violation_name(check.first_violation->kind) + " at token " +
                        std::to_string(check.first_violation->token));
  }
  Segmentation segments;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    switch (labels[i]) {
      case BoundaryLabel::Begin:
        open.push_back(i);
        break;
      case BoundaryLabel::End:
        segments.push_back({open.back(), i});
        open.pop_back();
        break;
      case BoundaryLabel::BeginEnd:
        segments.push_back({i, i});
        break;
      case BoundaryLabel::Inside:
        break;
    }
  }
  std::sort(segments.begin(), segments.end());
  return segments;
}

LabelSequence segments_to_labels(const Segmentation& segments, std::size_t length) {
  for (const auto& s : segments) {
    if (s.start > s.end || s.end >= length) {
      throw ContractError("segment " + describe(s) + " out of range for length " +
                          std::to_string(length));
    }
  }
  for (std::size_t a = 0; a < segments.size(); ++a) {
    for (std::size_t b = a + 1; b < segments.size(); ++b) {
      const Segment& x = segments[a];
      const Segment& y = segments[b];
      if (x.start == y.start) {
        throw ContractError("segments " + describe(x) + " and " + describe(y) +
                            " share a start index");
      }
      if (x.end == y.end) {
        throw ContractError("segments " + describe(x) + " and " + describe(y) +
                            " share an end index");
      }
      const bool disjoint = x.end < y.start || y.end < x.start;
      if (!disjoint && !x.contains(y) && !y.contains(x)) {
        throw ContractError("segments " + describe(x) + " and " + describe(y) +
                            " partially overlap");
      }
    }
  }
  LabelSequence labels(length, BoundaryLabel::Inside);
  std::vector<bool> covered(length, false);
  for (const auto& s : segments) {
    if (s.start == s.end) {
      labels[s.start] = BoundaryLabel::BeginEnd;
    } else {
      labels[s.start] = BoundaryLabel::Begin;
      labels[s.end] = BoundaryLabel::End;
    }
    std::fill(covered.begin() + static_cast<std::ptrdiff_t>(s.start),
              covered.begin() + static_cast<std::ptrdiff_t>(s.end) + 1, true);
  }
  const auto gap = std::find(covered.begin(), covered.end(), false);
  if (gap != covered.end()) {
    throw ContractError("token " + std::to_string(gap - covered.begin()) +
                        " is not covered by any segment");
  }
  return labels;
}

std::vector<std::size_t> segment_depths(const Segmentation& segments) {
  std::vector<std::size_t> depths(segments.size(), 0);
  for (std::size_t a = 0; a < segments.size(); ++a) {
    for (const auto& other : segments) {
      if (other.contains(segments[a])) ++depths[a];
    }
  }
  return depths;
}

std::string render_brackets(const Sentence& sentence, const LabelSequence& labels) {
  if (labels.size() != sentence.size()) {
    throw ContractError("label count does not match sentence length");
  }
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!out.empty()) out += ' ';
    const bool opens = labels[i] == BoundaryLabel::Begin || labels[i] == BoundaryLabel::BeginEnd;
    const bool closes = labels[i] == BoundaryLabel::End || labels[i] == BoundaryLabel::BeginEnd;
    if (opens) out += "[ ";
    out += sentence.tokens[i].form;
    if (closes) out += " ]";
  }
  return out;
}

}  // namespace eduseg
