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
#include "legal_sbd/bilou.h"
#include "legal_sbd/errors.h"
#include "test_util.h"

namespace legal_sbd {
namespace {

using enum Label;

// Independent labeling: for each token, collect the spans it intersects by
// brute force over all spans, then label by position within the span.
LabelSequence brute_force_labels(const TokenSequence& seq,
                                 const std::vector<SentenceSpan>& spans) {
  LabelSequence out(seq.size(), O);
  for (const SentenceSpan& span : spans) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i].start < span.end && span.start < seq[i].end) inside.push_back(i);
    }
    for (std::size_t k = 0; k < inside.size(); ++k) {
      Label l = I;
      if (inside.size() == 1) {
        l = U;
      } else if (k == 0) {
        l = B;
      } else if (k + 1 == inside.size()) {
        l = L;
      }
      out[inside[k]] = l;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("two short sentences") {
  const TokenSequence seq = tokenize("A. B.");
  const std::vector<SentenceSpan> spans = {{0, 2}, {3, 5}};
  const LabelSequence labels = encode_bilou(seq, spans);
  CHECK(labels == LabelSequence{B, L, O, B, L});
  CHECK(decode_bilou(seq, labels) == spans);
}

TEST_CASE("adjacent sentences without whitespace") {
  const TokenSequence seq = tokenize("A.B.C");
  const std::vector<SentenceSpan> spans = {{0, 2}, {2, 4}, {4, 5}};
  const LabelSequence labels = encode_bilou(seq, spans);
  CHECK(labels == LabelSequence{B, L, B, L, U});
  CHECK(decode_bilou(seq, labels) == spans);
}

TEST_CASE("single-token sentence is U") {
  const TokenSequence seq = tokenize("Oui");
  CHECK(encode_bilou(seq, {{0, 3}}) == LabelSequence{U});
}

TEST_CASE("interior whitespace is I, outer whitespace is O") {
  const std::string text = "D._ est entré à l'école le 16 juillet 1979.";
  const TokenSequence seq = tokenize(text);
  const std::vector<SentenceSpan> spans = {{0, 43}};
  const LabelSequence labels = encode_bilou(seq, spans);
  CHECK(labels == brute_force_labels(seq, spans));
  REQUIRE(labels.size() == 22);  // 14 content + 8 whitespace tokens
  CHECK(labels.front() == B);
  CHECK(labels.back() == L);
  CHECK(std::count(labels.begin(), labels.end(), I) == 20);

  const TokenSequence padded = tokenize("  " + text + "\n");
  const LabelSequence p = encode_bilou(padded, {{2, 45}});
  CHECK(p.front() == O);
  CHECK(p[1] == B);
  CHECK(p[p.size() - 2] == L);
  CHECK(p.back() == O);
}

TEST_CASE("lenient decoding") {
  const TokenSequence seq = tokenize("A.");
  CHECK(decode_bilou(seq, {I, I}) == std::vector<SentenceSpan>{{0, 2}});
  CHECK(decode_bilou(seq, {B, B}) == std::vector<SentenceSpan>{{0, 2}});
  CHECK(decode_bilou(seq, {O, O}).empty());
  CHECK_THROWS_AS(decode_bilou(seq, {O}), DataError);

  // Runs are trimmed to non-whitespace tokens; whitespace-only runs vanish.
  const TokenSequence ws = tokenize("A \n B");
  CHECK(decode_bilou(ws, {O, I, I, I, O}).empty());
  CHECK(decode_bilou(ws, {B, I, L, O, U}) ==
        std::vector<SentenceSpan>{{0, 1}, {4, 5}});
}

TEST_CASE("spans that cut through a token stay well formed") {
  const TokenSequence seq = tokenize("Abc def");
  // Both spans touch "def"; it goes to the later span.
  const LabelSequence labels = encode_bilou(seq, {{0, 5}, {5, 7}});
  CHECK(is_well_formed(labels));
  CHECK(labels == LabelSequence{B, L, U});
}

TEST_CASE("well-formedness check") {
  CHECK(is_well_formed({}));
  CHECK(is_well_formed({O, U, B, I, I, L, O}));
  CHECK_FALSE(is_well_formed({I}));
  CHECK_FALSE(is_well_formed({B, O, L}));
  CHECK_FALSE(is_well_formed({B}));
  CHECK_FALSE(is_well_formed({B, U, L}));
}

TEST_CASE("round trip on random documents") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const TokenSequence seq = tokenize(testing::random_text(rng, 80));
    const auto spans = testing::random_aligned_spans(seq, rng);
    const LabelSequence labels = encode_bilou(seq, spans);
    REQUIRE(is_well_formed(labels));
    REQUIRE(labels == brute_force_labels(seq, spans));
    REQUIRE(decode_bilou(seq, labels) == spans);
  }
}

TEST_CASE("decoding arbitrary labels yields sorted disjoint spans") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const TokenSequence seq = tokenize(testing::random_text(rng, 60));
    LabelSequence labels(seq.size());
    for (Label& l : labels) l = static_cast<Label>(pick(rng));
    const auto spans = decode_bilou(seq, labels);
    for (std::size_t k = 0; k < spans.size(); ++k) {
      REQUIRE(spans[k].start < spans[k].end);
      if (k > 0) REQUIRE(spans[k - 1].end <= spans[k].start);
    }
  }
}

}  // namespace legal_sbd
