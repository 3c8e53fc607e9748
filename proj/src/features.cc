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

#include "legal_sbd/features.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

struct TokenShape {
  SpecialCategory special;
  std::string lowercase;
  std::int64_t length;
  std::string sign;
  bool lower;
  bool upper;
  bool number;
  bool space;
};

TokenShape shape_of(const Token& token, const FeatureConfig& config) {
  const std::u32string chars = unicode::decode_utf8(token.text);
  TokenShape s;
  s.special = special_category(token, config);
  s.lowercase = unicode::encode_utf8(unicode::to_lower(chars));
  s.length = static_cast<std::int64_t>(chars.size());
  s.sign = signature(token.text);
  s.lower = !chars.empty() && unicode::is_lower(chars.front());
  s.upper = !chars.empty() && unicode::is_upper(chars.front());
  s.number = !chars.empty() &&
             std::all_of(chars.begin(), chars.end(), unicode::is_digit);
  s.space = !chars.empty() &&
            std::all_of(chars.begin(), chars.end(), unicode::is_space);
  return s;
}

std::string offset_prefix(int offset) {
  if (offset > 0) return "+" + std::to_string(offset) + ":";
  return std::to_string(offset) + ":";
}

void append_python_string(std::string_view s, std::string* out) {
  const bool has_single = s.find('\'') != std::string_view::npos;
  const bool has_double = s.find('"') != std::string_view::npos;
  const char quote = has_single && !has_double ? '"' : '\'';
  out->push_back(quote);
  for (char c : s) {
    switch (c) {
      case '\\': *out += "\\\\"; break;
      case '\n': *out += "\\n"; break;
      case '\r': *out += "\\r"; break;
      case '\t': *out += "\\t"; break;
      default:
        if (c == quote) out->push_back('\\');
        out->push_back(c);
    }
  }
  out->push_back(quote);
}

void append_python_value(const FeatureValue& value, std::string* out) {
  if (const bool* b = std::get_if<bool>(&value)) {
    *out += *b ? "True" : "False";
  } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
    *out += std::to_string(*i);
  } else if (const double* d = std::get_if<double>(&value)) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), *d);
    std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
    *out += text;
    if (text.find_first_of(".eni") == std::string_view::npos) *out += ".0";
  } else {
    append_python_string(std::get<std::string>(value), out);
  }
}

}  // namespace

std::string_view special_category_name(SpecialCategory category) {
  switch (category) {
    case SpecialCategory::kEnd: return "End";
    case SpecialCategory::kOpen: return "Open";
    case SpecialCategory::kClose: return "Close";
    case SpecialCategory::kNewline: return "Newline";
    case SpecialCategory::kAbbr: return "Abbr";
    case SpecialCategory::kSpace: return "S";
    case SpecialCategory::kNo: return "No";
  }
  return "No";
}

SpecialCategory special_category(const Token& token,
                                 const FeatureConfig& config) {
  if (token.kind == TokenKind::kNewline) return SpecialCategory::kNewline;
  if (token.kind == TokenKind::kWhitespace) return SpecialCategory::kSpace;
  const std::u32string chars = unicode::decode_utf8(token.text);
  if (chars.size() != 1) return SpecialCategory::kNo;
  const char32_t c = chars.front();
  auto in = [c](const std::u32string& set) {
    return set.find(c) != std::u32string::npos;
  };
  if (in(config.end_chars)) return SpecialCategory::kEnd;
  if (in(config.open_chars)) return SpecialCategory::kOpen;
  if (in(config.close_chars)) return SpecialCategory::kClose;
  if (in(config.abbr_chars)) return SpecialCategory::kAbbr;
  return SpecialCategory::kNo;
}

std::string signature(std::string_view text) {
  std::string out;
  for (char32_t c : unicode::decode_utf8(text)) {
    if (unicode::is_lower(c)) {
      out.push_back('c');
    } else if (unicode::is_upper(c)) {
      out.push_back('C');
    } else if (unicode::is_digit(c)) {
      out.push_back('N');
    } else {
      out.push_back('S');
    }
  }
  return out;
}

void FeatureVector::add(std::string key, FeatureValue value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

const FeatureValue* FeatureVector::find(std::string_view key) const {
  for (const Entry& e : entries_) {
    if (e.first == key) return &e.second;
  }
  return nullptr;
}

std::vector<FeatureVector::Entry> FeatureVector::sorted() const {
  std::vector<Entry> out = entries_;
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return out;
}

std::string to_python_literal(const FeatureVector& features) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : features.sorted()) {
    if (!first) out += ", ";
    first = false;
    append_python_string(key, &out);
    out += ": ";
    append_python_value(value, &out);
  }
  out += "}";
  return out;
}

namespace {

FeatureVector extract_from_shapes(const std::vector<TokenShape>& shapes,
                                  std::size_t index) {
  const std::size_t last = shapes.size() - 1;
  FeatureVector f;
  const TokenShape& c = shapes[index];
  f.add("bias", 1.0);
  f.add("0:lowercase", c.lowercase);
  f.add("0:lower", c.lower);
  f.add("0:upper", c.upper);
  f.add("0:numeric", c.number);
  f.add("0:special", std::string(special_category_name(c.special)));
  f.add("0:sign", c.sign);
  f.add("0:length", c.length);
  f.add("0:BOS", index == 0);
  f.add("0:EOS", index == last);

  auto neighbor = [&](int d) {
    const auto pos = static_cast<std::ptrdiff_t>(index) + d;
    if (pos < 0 || pos > static_cast<std::ptrdiff_t>(last)) return;
    const int w = d < 0 ? -d : d;
    const auto p = static_cast<std::size_t>(pos);
    const TokenShape& s = shapes[p];
    const std::string prefix = offset_prefix(d);
    if (d < 0) {
      f.add(prefix + "BOS", p == 0);
    } else {
      f.add(prefix + "EOS", p == last);
    }
    f.add(prefix + "special", std::string(special_category_name(s.special)));
    if (w <= kLowercaseWindow) {
      f.add(prefix + "lowercase", s.lowercase);
      f.add(prefix + "length", s.length);
    }
    if (w <= kSignatureWindow) f.add(prefix + "sign", s.sign);
    if (w <= kShapeWindow) {
      f.add(prefix + "lower", s.lower);
      f.add(prefix + "upper", s.upper);
      f.add(prefix + "number", s.number);
      f.add(prefix + "space", s.space);
    }
  };
  for (int d = 1; d <= kSpecialWindow; ++d) neighbor(-d);
  for (int d = 1; d <= kSpecialWindow; ++d) neighbor(d);
  return f;
}

std::vector<TokenShape> shapes_of(const TokenSequence& seq,
                                  const FeatureConfig& config) {
  std::vector<TokenShape> shapes;
  shapes.reserve(seq.size());
  for (const Token& tok : seq.tokens) shapes.push_back(shape_of(tok, config));
  return shapes;
}

}  // namespace

FeatureVector extract(const TokenSequence& seq, std::size_t index,
                      const FeatureConfig& config) {
  if (index >= seq.size()) {
    throw std::out_of_range("feature index " + std::to_string(index) +
                            " out of range for " + std::to_string(seq.size()) +
                            " tokens");
  }
  return extract_from_shapes(shapes_of(seq, config), index);
}

std::vector<FeatureVector> extract_all(const TokenSequence& seq,
                                       const FeatureConfig& config) {
  const std::vector<TokenShape> shapes = shapes_of(seq, config);
  std::vector<FeatureVector> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.push_back(extract_from_shapes(shapes, i));
  }
  return out;
}

std::vector<Attribute> binarize(const FeatureVector& features) {
  std::vector<Attribute> out;
  out.reserve(features.size());
  for (const auto& [key, value] : features.entries()) {
    if (const bool* b = std::get_if<bool>(&value)) {
      out.push_back({key + (*b ? "=true" : "=false"), 1.0});
    } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
      out.push_back({key, static_cast<double>(*i)});
    } else if (const double* d = std::get_if<double>(&value)) {
      out.push_back({key, *d});
    } else {
      out.push_back({key + "=" + std::get<std::string>(value), 1.0});
    }
  }
  return out;
}

}  // namespace legal_sbd
