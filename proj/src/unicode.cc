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

#include "legal_sbd/unicode.h"

#include <algorithm>
#include <iterator>

namespace legal_sbd {
namespace unicode {
namespace {

struct CodepointRange {
  Codepoint lo;
  Codepoint hi;
};

struct LowerMapping {
  Codepoint from;
  Codepoint first;
  Codepoint second;  // 0 when the mapping is a single scalar
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&table)[N], Codepoint cp) {
  auto it = std::upper_bound(
      std::begin(table), std::end(table), cp,
      [](Codepoint value, const CodepointRange& r) { return value < r.lo; });
  if (it == std::begin(table)) return false;
  --it;
  return cp <= it->hi;
}

// Decodes one scalar starting at `i`; returns its byte length, or 0 if the
// sequence is malformed.
std::size_t decode_one(std::string_view s, std::size_t i, Codepoint* out) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  }
  std::size_t len;
  Codepoint cp;
  Codepoint min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  *out = cp;
  return len;
}

}  // namespace

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    Codepoint cp;
    const std::size_t n = decode_one(utf8, i, &cp);
    if (n == 0) {
      out.push_back(kReplacementChar);
      ++i;
    } else {
      out.push_back(cp);
      i += n;
    }
  }
  return out;
}

bool is_valid_utf8(std::string_view utf8) {
  for (std::size_t i = 0; i < utf8.size();) {
    Codepoint cp;
    const std::size_t n = decode_one(utf8, i, &cp);
    if (n == 0) return false;
    i += n;
  }
  return true;
}

void append_utf8(Codepoint cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (Codepoint cp : text) append_utf8(cp, &out);
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool is_letter(Codepoint cp) { return in_ranges(kLetterRanges, cp); }
bool is_digit(Codepoint cp) { return in_ranges(kDigitRanges, cp); }
bool is_space(Codepoint cp) { return in_ranges(kSpaceRanges, cp); }
bool is_newline(Codepoint cp) { return cp == U'\n' || cp == U'\r'; }
bool is_lower(Codepoint cp) { return in_ranges(kLowerRanges, cp); }
bool is_upper(Codepoint cp) { return in_ranges(kUpperRanges, cp); }

std::u32string to_lower(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (Codepoint cp : text) {
    auto it = std::lower_bound(
        std::begin(kLowerMappings), std::end(kLowerMappings), cp,
        [](const LowerMapping& m, Codepoint value) { return m.from < value; });
    if (it == std::end(kLowerMappings) || it->from != cp) {
      out.push_back(cp);
      continue;
    }
    out.push_back(it->first);
    if (it->second != 0) out.push_back(it->second);
  }
  return out;
}

std::string to_lower(std::string_view utf8) {
  return encode_utf8(to_lower(decode_utf8(utf8)));
}

OffsetIndex::OffsetIndex(std::string_view utf8) {
  byte_offsets_.reserve(utf8.size() + 1);
  for (std::size_t i = 0; i < utf8.size(); ++i) {
    if ((static_cast<unsigned char>(utf8[i]) & 0xC0) != 0x80) {
      byte_offsets_.push_back(i);
    }
  }
  byte_offsets_.push_back(utf8.size());
}

std::string_view OffsetIndex::slice(std::string_view utf8, std::size_t start,
                                    std::size_t end) const {
  const std::size_t b = byte_offsets_[start];
  return utf8.substr(b, byte_offsets_[end] - b);
}

}  // namespace unicode
}  // namespace legal_sbd
