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

#ifndef LEGAL_SBD_TOKENIZER_H_
#define LEGAL_SBD_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace legal_sbd {

enum class TokenKind { kWord, kNumber, kWhitespace, kNewline, kOther };

std::string_view token_kind_name(TokenKind kind);

// A slice [start, end) of the source text, in scalar-value offsets.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kOther;

  bool is_space() const {
    return kind == TokenKind::kWhitespace || kind == TokenKind::kNewline;
  }

  bool operator==(const Token&) const = default;
};

struct TokenSequence {
  std::string doc_id;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
};

// Aggressive, lossless tokenization. Maximal runs of letters form a word,
// maximal runs of decimal digits form a number, every line break is its own
// newline token, maximal runs of other whitespace form one whitespace token,
// and any remaining character stands alone.
TokenSequence tokenize(std::string_view text, std::string doc_id = {});

// Concatenates token texts; the inverse of tokenize().
std::string detokenize(const TokenSequence& seq);

// Number of tokens that are not whitespace or newlines.
std::size_t count_content_tokens(const TokenSequence& seq);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_TOKENIZER_H_
