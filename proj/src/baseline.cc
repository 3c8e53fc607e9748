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

#include "legal_sbd/baseline.h"

#include <stdexcept>

#include "legal_sbd/tokenizer.h"
#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

constexpr std::u32string_view kOpeningQuotes = U"\"'«“‘„‹";

char32_t first_char(const Token& tok) {
  return unicode::decode_utf8(tok.text).front();
}

bool is_single(const Token& tok, std::u32string_view set) {
  if (tok.kind != TokenKind::kOther) return false;
  return set.find(first_char(tok)) != std::u32string_view::npos;
}

bool starts_sentence(const Token& tok) {
  if (tok.kind == TokenKind::kNumber) return true;
  const char32_t c = first_char(tok);
  if (tok.kind == TokenKind::kWord) return unicode::is_upper(c);
  return tok.kind == TokenKind::kOther &&
         kOpeningQuotes.find(c) != std::u32string_view::npos;
}

}  // namespace

std::vector<SentenceSpan> rule_split(std::string_view text,
                                     const RuleConfig& config) {
  if (config.terminators.empty()) {
    throw std::invalid_argument("rule splitter needs at least one terminator");
  }
  const TokenSequence seq = tokenize(text);
  const std::size_t n = seq.size();

  // Token indices after which a sentence ends.
  std::vector<bool> ends_after(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Token& tok = seq[i];
    if (is_single(tok, config.terminators)) {
      std::size_t j = i + 1;
      if (j < n && seq[j].is_space()) {
        while (j < n && seq[j].is_space()) ++j;
        if (j == n || starts_sentence(seq[j])) ends_after[i] = true;
      }
    } else if (config.colon_newline_rule && is_single(tok, U":")) {
      if (i + 1 < n && seq[i + 1].kind == TokenKind::kNewline) {
        ends_after[i] = true;
      }
    } else if (tok.kind == TokenKind::kNewline) {
      std::size_t j = i + 1;
      while (j < n && seq[j].kind == TokenKind::kWhitespace) ++j;
      if (j < n && seq[j].kind == TokenKind::kNewline) ends_after[i] = true;
    }
  }

  std::vector<SentenceSpan> spans;
  std::size_t first = n;  // first content token of the open sentence
  std::size_t last = n;   // last content token of the open sentence
  auto close = [&] {
    if (first == n) return;
    spans.push_back({seq[first].start, seq[last].end});
    first = last = n;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!seq[i].is_space()) {
      if (first == n) first = i;
      last = i;
    }
    if (ends_after[i]) close();
  }
  close();

  if (config.min_sentence_chars > 1 && spans.size() > 1) {
    std::vector<SentenceSpan> merged;
    for (std::size_t k = 0; k < spans.size(); ++k) {
      SentenceSpan s = spans[k];
      while (s.end - s.start < config.min_sentence_chars && k + 1 < spans.size()) {
        s.end = spans[++k].end;
      }
      if (s.end - s.start < config.min_sentence_chars && !merged.empty()) {
        merged.back().end = s.end;
      } else {
        merged.push_back(s);
      }
    }
    spans = std::move(merged);
  }
  return spans;
}

}  // namespace legal_sbd
