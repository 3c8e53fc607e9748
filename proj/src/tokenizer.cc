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

#include "legal_sbd/tokenizer.h"

#include <algorithm>

#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

using unicode::Codepoint;

TokenKind classify(Codepoint cp) {
  if (unicode::is_newline(cp)) return TokenKind::kNewline;
  if (unicode::is_space(cp)) return TokenKind::kWhitespace;
  if (unicode::is_letter(cp)) return TokenKind::kWord;
  if (unicode::is_digit(cp)) return TokenKind::kNumber;
  return TokenKind::kOther;
}

bool merges(TokenKind kind) {
  return kind == TokenKind::kWord || kind == TokenKind::kNumber ||
         kind == TokenKind::kWhitespace;
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kWhitespace: return "whitespace";
    case TokenKind::kNewline: return "newline";
    case TokenKind::kOther: return "other";
  }
  return "other";
}

TokenSequence tokenize(std::string_view text, std::string doc_id) {
  TokenSequence seq;
  seq.doc_id = std::move(doc_id);
  const std::u32string chars = unicode::decode_utf8(text);
  std::size_t i = 0;
  while (i < chars.size()) {
    const TokenKind kind = classify(chars[i]);
    std::size_t j = i + 1;
    if (merges(kind)) {
      while (j < chars.size() && classify(chars[j]) == kind) ++j;
    }
    Token tok;
    tok.start = i;
    tok.end = j;
    tok.kind = kind;
    tok.text = unicode::encode_utf8(
        std::u32string_view(chars).substr(i, j - i));
    seq.tokens.push_back(std::move(tok));
    i = j;
  }
  return seq;
}

std::string detokenize(const TokenSequence& seq) {
  std::string out;
  for (const Token& tok : seq.tokens) out += tok.text;
  return out;
}

std::size_t count_content_tokens(const TokenSequence& seq) {
  return static_cast<std::size_t>(std::count_if(
      seq.tokens.begin(), seq.tokens.end(),
      [](const Token& t) { return !t.is_space(); }));
}

}  // namespace legal_sbd
