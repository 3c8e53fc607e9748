// Copyright 2026 The Legal SBD Authors.
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

#include "legal_sbd/bilou.h"

#include <string>

#include "legal_sbd/errors.h"

namespace legal_sbd {

char label_char(Label label) {
  static constexpr char kChars[] = {'B', 'I', 'L', 'O', 'U'};
  return kChars[static_cast<std::size_t>(label)];
}

std::optional<Label> parse_label(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Label l : kAllLabels) {
    if (label_char(l) == name[0]) return l;
  }
  return std::nullopt;
}

LabelSequence encode_bilou(const TokenSequence& seq,
                           const std::vector<SentenceSpan>& spans) {
  LabelSequence labels(seq.size(), Label::O);
  std::size_t t = 0;
  std::optional<std::size_t> prev_first;
  std::size_t prev_last = 0;
  for (const SentenceSpan& span : spans) {
    while (t < seq.size() && seq[t].end <= span.start) ++t;
    // A token straddling two spans goes to the later one; the earlier span
    // is shortened so the sequence stays well formed.
    if (prev_first && t == prev_last && prev_last > *prev_first) {
      labels[prev_last - 1] =
          prev_last - 1 == *prev_first ? Label::U : Label::L;
    }
    std::size_t last = t;
    while (last < seq.size() && seq[last].start < span.end) ++last;
    if (last == t) {
      throw DataError("span [" + std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ") intersects no token");
    }
    if (last - t == 1) {
      labels[t] = Label::U;
    } else {
      labels[t] = Label::B;
      for (std::size_t k = t + 1; k + 1 < last; ++k) labels[k] = Label::I;
      labels[last - 1] = Label::L;
    }
    prev_first = t;
    prev_last = last - 1;
    t = last - 1;
  }
  return labels;
}

namespace {

bool closes(Label l) { return l == Label::L || l == Label::U; }
bool opens(Label l) { return l == Label::B || l == Label::U; }

}  // namespace

std::vector<SentenceSpan> decode_bilou(const TokenSequence& seq,
                                       const LabelSequence& labels) {
  if (labels.size() != seq.size()) {
    throw DataError("label sequence length " + std::to_string(labels.size()) +
                    " does not match token count " + std::to_string(seq.size()));
  }
  std::vector<SentenceSpan> spans;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i] == Label::O) {
      ++i;
      continue;
    }
    // A run also ends at a clean sentence junction (L or U followed by B or
    // U), so adjacent sentences with no whitespace between them survive.
    std::size_t j = i + 1;
    while (j < labels.size() && labels[j] != Label::O &&
           !(closes(labels[j - 1]) && opens(labels[j]))) {
      ++j;
    }
    std::size_t first = i;
    std::size_t last = j;
    while (first < last && seq[first].is_space()) ++first;
    while (last > first && seq[last - 1].is_space()) --last;
    if (first < last) {
      SentenceSpan span;
      span.start = seq[first].start;
      span.end = seq[last - 1].end;
      spans.push_back(span);
    }
    i = j;
  }
  return spans;
}

bool is_well_formed(const LabelSequence& labels) {
  bool inside = false;
  for (Label l : labels) {
    switch (l) {
      case Label::O:
      case Label::U:
        if (inside) return false;
        break;
      case Label::B:
        if (inside) return false;
        inside = true;
        break;
      case Label::I:
        if (!inside) return false;
        break;
      case Label::L:
        if (!inside) return false;
        inside = false;
        break;
    }
  }
  return !inside;
}

}  // namespace legal_sbd
