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

#ifndef LEGAL_SBD_BILOU_H_
#define LEGAL_SBD_BILOU_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "legal_sbd/corpus.h"
#include "legal_sbd/tokenizer.h"

namespace legal_sbd {

// Label indices are fixed; the CRF, the model file and Viterbi tie-breaking
// all rely on this order.
enum class Label : std::uint8_t { B = 0, I = 1, L = 2, O = 3, U = 4 };

inline constexpr std::size_t kNumLabels = 5;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::B, Label::I, Label::L, Label::O, Label::U};

char label_char(Label label);
std::optional<Label> parse_label(std::string_view name);

using LabelSequence = std::vector<Label>;

// A token is inside a span iff their character ranges intersect. A span with
// one inside token labels it U; otherwise B, I..., L. Everything else is O.
LabelSequence encode_bilou(const TokenSequence& seq,
                           const std::vector<SentenceSpan>& spans);

// Each maximal run of non-O labels becomes one span, trimmed to start and end
// on non-whitespace tokens. Runs are also cut where L or U is directly
// followed by B or U. Ill-formed runs such as [I, I] or [B, B] are
// accepted. Runs made only of whitespace are dropped.
std::vector<SentenceSpan> decode_bilou(const TokenSequence& seq,
                                       const LabelSequence& labels);

// True if `labels` matches (O | U | B I* L)*.
bool is_well_formed(const LabelSequence& labels);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_BILOU_H_
