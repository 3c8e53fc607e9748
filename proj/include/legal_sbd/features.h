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

#ifndef LEGAL_SBD_FEATURES_H_
#define LEGAL_SBD_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "legal_sbd/tokenizer.h"

namespace legal_sbd {

// Coarse token class used by the "special" feature.
enum class SpecialCategory { kEnd, kOpen, kClose, kNewline, kAbbr, kSpace, kNo };

// "End", "Open", "Close", "Newline", "Abbr", "S" or "No".
std::string_view special_category_name(SpecialCategory category);

struct FeatureConfig {
  std::u32string end_chars = U".!?";
  std::u32string open_chars = U"([{";
  std::u32string close_chars = U")]}";
  std::u32string abbr_chars = U"'’";
};

SpecialCategory special_category(const Token& token,
                                 const FeatureConfig& config = {});

// Per-character shape: lowercase "c", uppercase "C", digit "N", else "S".
std::string signature(std::string_view text);

using FeatureValue = std::variant<bool, std::int64_t, double, std::string>;

// Sparse features of one token position, keyed "<offset>:<name>" with offsets
// written "-3", "0", "+2", plus the unprefixed "bias".
class FeatureVector {
 public:
  using Entry = std::pair<std::string, FeatureValue>;

  void add(std::string key, FeatureValue value);
  const FeatureValue* find(std::string_view key) const;
  bool contains(std::string_view key) const { return find(key) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Entries in byte-wise key order.
  std::vector<Entry> sorted() const;

  bool operator==(const FeatureVector& other) const {
    return sorted() == other.sorted();
  }

 private:
  std::vector<Entry> entries_;
};

// Key-sorted rendering as a Python dict literal, e.g.
// {'+1:EOS': False, '0:length': 2, 'bias': 1.0}.
std::string to_python_literal(const FeatureVector& features);

// Windows (± positions around the center) for each neighbor feature.
inline constexpr int kSpecialWindow = 10;   // special, BOS/EOS
inline constexpr int kLowercaseWindow = 7;  // lowercase, length
inline constexpr int kSignatureWindow = 5;
inline constexpr int kShapeWindow = 3;      // lower, upper, number, space

FeatureVector extract(const TokenSequence& seq, std::size_t index,
                      const FeatureConfig& config = {});
std::vector<FeatureVector> extract_all(const TokenSequence& seq,
                                       const FeatureConfig& config = {});

// A CRF input attribute: an indicator string with a real value.
struct Attribute {
  std::string name;
  double value = 1.0;

  bool operator==(const Attribute&) const = default;
};

// Booleans become "key=true"/"key=false" and strings "key=value", each with
// value 1; numeric features keep their key and carry their number.
std::vector<Attribute> binarize(const FeatureVector& features);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_FEATURES_H_
