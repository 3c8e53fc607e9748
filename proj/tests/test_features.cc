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

#include <map>
#include <random>
#include <regex>
#include <set>

#include "doctest.h"
#include "golden.h"
#include "legal_sbd/features.h"
#include "test_util.h"

namespace legal_sbd {
namespace {

Token token_of(const std::string& text) { return tokenize(text).tokens.at(0); }

// Window of each neighbor feature, keyed by feature name.
const std::map<std::string, int> kWindows = {
    {"special", 10}, {"BOS", 10},   {"EOS", 10},   {"lowercase", 7},
    {"length", 7},   {"sign", 5},   {"lower", 3},  {"upper", 3},
    {"number", 3},   {"space", 3}};

}  // namespace

TEST_CASE("reference dump for 'en'") {
  const TokenSequence seq = tokenize("C'est en outre");
  REQUIRE(seq.size() == 7);
  REQUIRE(seq[4].text == "en");
  const FeatureVector got = extract(seq, 4);
  const auto expected = testing::parse_dict_literal(testing::kEnFeatureDump);
  std::map<std::string, FeatureValue> actual;
  for (const auto& [k, v] : got.entries()) actual.emplace(k, v);
  CHECK(actual.size() == got.size());
  CHECK(actual == expected);
  CHECK(!got.contains("-4:lower"));
  CHECK(to_python_literal(got) ==
        to_python_literal(testing::to_feature_vector(expected)));
  const std::string lit = to_python_literal(got);
  CHECK(lit.rfind("{'+1:EOS': False, '+1:length': 1, ", 0) == 0);
  CHECK(lit.find("'-3:lowercase': \"'\"") != std::string::npos);
  CHECK(lit.find("'bias': 1.0}") != std::string::npos);
}

TEST_CASE("special categories") {
  CHECK(special_category(token_of(".")) == SpecialCategory::kEnd);
  CHECK(special_category(token_of("!")) == SpecialCategory::kEnd);
  CHECK(special_category(token_of("?")) == SpecialCategory::kEnd);
  CHECK(special_category(token_of("(")) == SpecialCategory::kOpen);
  CHECK(special_category(token_of("}")) == SpecialCategory::kClose);
  CHECK(special_category(token_of("\n")) == SpecialCategory::kNewline);
  CHECK(special_category(token_of("'")) == SpecialCategory::kAbbr);
  CHECK(special_category(token_of("’")) == SpecialCategory::kAbbr);
  CHECK(special_category(token_of("est")) == SpecialCategory::kNo);
  CHECK(special_category(token_of(";")) == SpecialCategory::kNo);
  CHECK(special_category(token_of("…")) == SpecialCategory::kNo);
  CHECK(special_category_name(special_category(token_of(" "))) == "S");

  FeatureConfig config;
  config.end_chars += U"…";
  CHECK(special_category(token_of("…"), config) == SpecialCategory::kEnd);
}

TEST_CASE("signatures") {
  CHECK(signature("en") == "cc");
  CHECK(signature("C") == "C");
  CHECK(signature("Abc12!") == "CccNNS");
  CHECK(signature("École") == "Ccccc");
  CHECK(signature(" ") == "S");
}

TEST_CASE("single token has only center keys") {
  const FeatureVector f = extract(tokenize("Oui"), 0);
  CHECK(f.size() == 10);
  CHECK(std::get<bool>(*f.find("0:BOS")));
  CHECK(std::get<bool>(*f.find("0:EOS")));
  CHECK(std::get<double>(*f.find("bias")) == 1.0);
  CHECK(std::get<std::int64_t>(*f.find("0:length")) == 3);
  CHECK(std::get<std::string>(*f.find("0:lowercase")) == "oui");
  CHECK_THROWS_AS(extract(tokenize("Oui"), 1), std::out_of_range);
}

TEST_CASE("key counts at the start of a long sequence") {
  std::string text;
  for (int i = 0; i < 15; ++i) text += "mot ";
  const TokenSequence seq = tokenize(text);
  REQUIRE(seq.size() == 30);

  // Oracle: enumerate offsets and features independently of extract().
  std::set<std::string> expected = {"bias",       "0:lowercase", "0:lower",
                                    "0:upper",    "0:numeric",   "0:special",
                                    "0:sign",     "0:length",    "0:BOS",
                                    "0:EOS"};
  for (int d = 1; d <= 10; ++d) {
    for (const auto& [name, window] : kWindows) {
      if (name == "BOS") continue;
      if (d <= window) expected.insert("+" + std::to_string(d) + ":" + name);
    }
  }
  const FeatureVector f = extract(seq, 0);
  std::set<std::string> keys;
  for (const auto& [k, v] : f.entries()) keys.insert(k);
  CHECK(keys.size() == f.size());
  CHECK(keys == expected);
  CHECK(f.size() == 10 + 20 + 14 + 5 + 12);
}

TEST_CASE("keys respect their windows and are unique") {
  std::mt19937_64 rng(5);
  const std::regex key_re(R"(([-+]\d+|0):(\w+))");
  for (int trial = 0; trial < 100; ++trial) {
    const TokenSequence seq = tokenize(testing::random_text(rng, 50));
    if (seq.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos(0, seq.size() - 1);
    const std::size_t i = pos(rng);
    const FeatureVector f = extract(seq, i);
    std::set<std::string> seen;
    REQUIRE(f.contains("bias"));
    for (const auto& [key, value] : f.entries()) {
      REQUIRE(seen.insert(key).second);
      if (key == "bias") continue;
      std::smatch m;
      REQUIRE(std::regex_match(key, m, key_re));
      const int d = std::stoi(m[1].str());
      if (d == 0) continue;
      REQUIRE(kWindows.count(m[2].str()));
      REQUIRE(std::abs(d) <= kWindows.at(m[2].str()));
      const auto target = static_cast<std::ptrdiff_t>(i) + d;
      REQUIRE(target >= 0);
      REQUIRE(target < static_cast<std::ptrdiff_t>(seq.size()));
    }
  }
}

TEST_CASE("features depend only on the +-10 window") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    for (int w = 0; w < 20; ++w) text += testing::random_text(rng, 3) + "x ";
    TokenSequence seq = tokenize(text);
    const std::size_t i = seq.size() / 2;
    const FeatureVector before = extract(seq, i);
    // Replace every token outside the window with a different word of the
    // same... anything: only the count must stay the same.
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const auto dist = k > i ? k - i : i - k;
      if (dist > 10) seq.tokens[k].text = "Zz9";
    }
    REQUIRE(extract(seq, i) == before);
  }
}

TEST_CASE("binarization") {
  FeatureVector f;
  f.add("bias", 1.0);
  f.add("0:lower", true);
  f.add("-1:upper", false);
  f.add("0:length", std::int64_t{4});
  f.add("0:special", std::string("End"));
  const std::vector<Attribute> attrs = binarize(f);
  CHECK(attrs == std::vector<Attribute>{{"bias", 1.0},
                                        {"0:lower=true", 1.0},
                                        {"-1:upper=false", 1.0},
                                        {"0:length", 4.0},
                                        {"0:special=End", 1.0}});
}

TEST_CASE("python literal rendering") {
  FeatureVector f;
  f.add("b", std::string("'"));
  f.add("a", std::string("x\ny"));
  f.add("c", 2.5);
  f.add("d", std::int64_t{-3});
  CHECK(to_python_literal(f) == "{'a': 'x\\ny', 'b': \"'\", 'c': 2.5, 'd': -3}");
}

}  // namespace legal_sbd
