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

#ifndef LEGAL_SBD_BASELINE_H_
#define LEGAL_SBD_BASELINE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "legal_sbd/corpus.h"

namespace legal_sbd {

struct RuleConfig {
  std::u32string terminators = U".!?";
  // End a sentence at a colon directly followed by a line break.
  bool colon_newline_rule = true;
  // Shorter sentences (in characters) are merged into their successor.
  std::size_t min_sentence_chars = 1;
};

// Rule-based splitter. A sentence ends
//   - after a terminator followed by whitespace and then an uppercase letter,
//     a digit, an opening quote, or the end of the text;
//   - after a colon immediately followed by a newline (colon_newline_rule);
//   - at a blank line.
// There is no abbreviation list. Spans are trimmed of surrounding whitespace.
std::vector<SentenceSpan> rule_split(std::string_view text,
                                     const RuleConfig& config = {});

}  // namespace legal_sbd

#endif  // LEGAL_SBD_BASELINE_H_
