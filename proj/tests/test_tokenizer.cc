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

#include <random>

#include "doctest.h"
#include "legal_sbd/tokenizer.h"
#include "legal_sbd/unicode.h"
#include "test_util.h"

namespace legal_sbd {
namespace {

std::vector<std::string> content_texts(const TokenSequence& seq) {
  std::vector<std::string> out;
  for (const Token& t : seq.tokens) {
    if (!t.is_space()) out.push_back(t.text);
  }
  return out;
}

// Reference tokenizer: a boundary sits between two characters whenever their
// classes differ or the left one never merges.
std::vector<std::string> reference_tokens(const std::string& text) {
  const std::u32string cps = unicode::decode_utf8(text);
  auto cls = [](char32_t c) {
    if (c == U'\n' || c == U'\r') return 0;
    if (unicode::is_space(c)) return 1;
    if (unicode::is_letter(c)) return 2;
    if (unicode::is_digit(c)) return 3;
    return 4;
  };
  std::vector<std::string> out;
  std::u32string cur;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i > 0) {
      const int a = cls(cps[i - 1]);
      const int b = cls(cps[i]);
      if (a != b || a == 0 || a == 4) {
        out.push_back(unicode::encode_utf8(cur));
        cur.clear();
      }
    }
    cur.push_back(cps[i]);
  }
  if (!cur.empty()) out.push_back(unicode::encode_utf8(cur));
  return out;
}

bool kind_matches(const Token& t) {
  const std::u32string cps = unicode::decode_utf8(t.text);
  auto all = [&](auto pred) {
    for (char32_t c : cps) {
      if (!pred(c)) return false;
    }
    return !cps.empty();
  };
  switch (t.kind) {
    case TokenKind::kWord: return all(unicode::is_letter);
    case TokenKind::kNumber: return all(unicode::is_digit);
    case TokenKind::kNewline: return cps.size() == 1 && unicode::is_newline(cps[0]);
    case TokenKind::kWhitespace:
      return all([](char32_t c) {
        return unicode::is_space(c) && !unicode::is_newline(c);
      });
    case TokenKind::kOther:
      return cps.size() == 1 && !unicode::is_letter(cps[0]) &&
             !unicode::is_digit(cps[0]) && !unicode::is_space(cps[0]);
  }
  return false;
}

}  // namespace

TEST_CASE("aggressive tokenization of the French example") {
  const TokenSequence seq =
      tokenize("D._ est entré à l'école le 16 juillet 1979.");
  const std::vector<std::string> expected = {
      "D", ".", "_", "est", "entré", "à", "l", "'", "école", "le", "16",
      "juillet", "1979", "."};
  CHECK(content_texts(seq) == expected);
  CHECK(seq[0].kind == TokenKind::kWord);
  CHECK(seq[1].kind == TokenKind::kOther);
  CHECK(seq.tokens.back().end == 43);
}

TEST_CASE("empty text gives an empty sequence") {
  CHECK(tokenize("").empty());
  CHECK(detokenize(tokenize("")).empty());
}

TEST_CASE("each newline is its own token") {
  const TokenSequence seq = tokenize("a\n\nb");
  REQUIRE(seq.size() == 4);
  CHECK(seq[1].text == "\n");
  CHECK(seq[2].text == "\n");
  CHECK(seq[1].kind == TokenKind::kNewline);
  CHECK(reference_tokens("a\n\nb") ==
        std::vector<std::string>{"a", "\n", "\n", "b"});
}

TEST_CASE("whitespace runs merge but never absorb newlines") {
  const TokenSequence seq = tokenize("a \t  b \n c\r d");
  std::vector<TokenKind> kinds;
  for (const Token& t : seq.tokens) kinds.push_back(t.kind);
  CHECK(kinds == std::vector<TokenKind>{
                     TokenKind::kWord, TokenKind::kWhitespace, TokenKind::kWord,
                     TokenKind::kWhitespace, TokenKind::kNewline,
                     TokenKind::kWhitespace, TokenKind::kWord,
                     TokenKind::kNewline, TokenKind::kWhitespace,
                     TokenKind::kWord});
  CHECK(seq[1].text == " \t  ");
}

TEST_CASE("combining marks stay inside words") {
  const TokenSequence seq = tokenize("école");
  REQUIRE(seq.size() == 1);
  CHECK(seq[0].kind == TokenKind::kWord);
  CHECK(seq[0].end == 6);
}

TEST_CASE("mixed letters and digits split") {
  CHECK(content_texts(tokenize("art12bis")) ==
        std::vector<std::string>{"art", "12", "bis"});
  CHECK(content_texts(tokenize("1°")) == std::vector<std::string>{"1", "°"});
}

TEST_CASE("detokenize restores the text") {
  CHECK(detokenize(tokenize("16 juillet")) == "16 juillet");
}

TEST_CASE("tokenizer properties on random text") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string text = testing::random_text(rng, 60);
    const TokenSequence seq = tokenize(text);
    REQUIRE(detokenize(seq) == text);
    std::vector<std::string> texts;
    std::size_t pos = 0;
    for (const Token& t : seq.tokens) {
      REQUIRE(t.start == pos);
      REQUIRE(t.end > t.start);
      REQUIRE(t.end - t.start == unicode::length(t.text));
      REQUIRE(kind_matches(t));
      texts.push_back(t.text);
      pos = t.end;
    }
    REQUIRE(pos == unicode::length(text));
    REQUIRE(texts == reference_tokens(text));
  }
}

}  // namespace legal_sbd
