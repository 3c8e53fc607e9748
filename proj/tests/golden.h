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

#ifndef LEGAL_SBD_TESTS_GOLDEN_H_
#define LEGAL_SBD_TESTS_GOLDEN_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "legal_sbd/features.h"

namespace legal_sbd::testing {

// Reference feature dump for "en" in "C'est en outre".
inline constexpr std::string_view kEnFeatureDump = R"({
'bias': 1.0, '0:lowercase': 'en', '0:lower': True, '0:upper': False,
'0:numeric': False, '0:special': 'No', '0:sign': 'cc', '0:length': 2,
'0:BOS': False, '0:EOS': False, '-1:BOS': False, '-1:special': 'S',
'-1:lowercase': ' ', '-1:length': 1, '-1:sign': 'S', '-1:lower': False,
'-1:upper': False, '-1:number': False, '-1:space': True, '-2:BOS': False,
'-2:special': 'No', '-2:lowercase': 'est', '-2:length': 3,
'-2:sign': 'ccc', '-2:lower': True, '-2:upper': False, '-2:number': False,
'-2:space': False, '-3:BOS': False, '-3:special': 'Abbr',
'-3:lowercase': "'", '-3:length': 1, '-3:sign': 'S', '-3:lower': False,
'-3:upper': False, '-3:number': False, '-3:space': False, '-4:BOS': True,
'-4:special': 'No', '-4:lowercase': 'c', '-4:length': 1, '-4:sign': 'C',
'+1:EOS': False, '+1:special': 'S', '+1:lowercase': ' ', '+1:length': 1,
'+1:sign': 'S', '+1:lower': False, '+1:upper': False, '+1:number': False,
'+1:space': True, '+2:EOS': True, '+2:special': 'No',
'+2:lowercase': 'outre', '+2:length': 5, '+2:sign': 'ccccc',
'+2:lower': True, '+2:upper': False, '+2:number': False, '+2:space': False
})";

// Minimal reader for flat dict literals holding quoted strings, True/False,
// ints and floats.
inline std::map<std::string, FeatureValue> parse_dict_literal(
    std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\n' || s[i] == ',')) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= s.size() || s[i] != c) throw std::runtime_error("bad literal");
    ++i;
  };
  auto quoted = [&] {
    skip();
    const char q = s[i++];
    std::string out;
    while (s[i] != q) {
      if (s[i] == '\\') ++i;
      out += s[i++];
    }
    ++i;
    return out;
  };
  std::map<std::string, FeatureValue> out;
  expect('{');
  for (skip(); s[i] != '}'; skip()) {
    std::string key = quoted();
    expect(':');
    skip();
    FeatureValue value;
    if (s[i] == '\'' || s[i] == '"') {
      value = quoted();
    } else {
      std::size_t j = i;
      while (s[j] != ',' && s[j] != '\n' && s[j] != '}') ++j;
      const std::string tok(s.substr(i, j - i));
      i = j;
      if (tok == "True") {
        value = true;
      } else if (tok == "False") {
        value = false;
      } else if (tok.find('.') != std::string::npos) {
        value = std::stod(tok);
      } else {
        value = static_cast<std::int64_t>(std::stoll(tok));
      }
    }
    if (!out.emplace(std::move(key), std::move(value)).second) {
      throw std::runtime_error("duplicate key");
    }
  }
  return out;
}

// Key-sorted literal of a parsed dict, built from a FeatureVector so both
// sides share one renderer only for formatting of scalars.
inline FeatureVector to_feature_vector(
    const std::map<std::string, FeatureValue>& m) {
  FeatureVector f;
  for (const auto& [k, v] : m) f.add(k, v);
  return f;
}

}  // namespace legal_sbd::testing

#endif  // LEGAL_SBD_TESTS_GOLDEN_H_
