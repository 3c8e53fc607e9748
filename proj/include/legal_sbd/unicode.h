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

#ifndef LEGAL_SBD_UNICODE_H_
#define LEGAL_SBD_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace legal_sbd {
namespace unicode {

// Unicode scalar values. Offsets throughout the library count these, not
// bytes.
using Codepoint = char32_t;

constexpr Codepoint kReplacementChar = 0xFFFD;

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per bad byte.
std::u32string decode_utf8(std::string_view utf8);

// Returns true if `utf8` is well-formed UTF-8 without surrogates.
bool is_valid_utf8(std::string_view utf8);

void append_utf8(Codepoint cp, std::string* out);
std::string encode_utf8(std::u32string_view text);

// Number of scalar values in a well-formed UTF-8 string.
std::size_t length(std::string_view utf8);

// Letters are general category L* plus nonspacing marks (Mn), so combining
// accents stay inside the word they modify.
bool is_letter(Codepoint cp);
// Decimal digits, general category Nd.
bool is_digit(Codepoint cp);
// Any whitespace, including line breaks and no-break space.
bool is_space(Codepoint cp);
// '\n' and a lone '\r'.
bool is_newline(Codepoint cp);
bool is_lower(Codepoint cp);
bool is_upper(Codepoint cp);

// Full lowercase mapping of a string (context-free, so final sigma is not
// special-cased).
std::u32string to_lower(std::u32string_view text);
std::string to_lower(std::string_view utf8);

// Maps scalar offsets of a UTF-8 string to byte offsets so that spans given
// in scalar units can be sliced out of the original bytes.
class OffsetIndex {
 public:
  explicit OffsetIndex(std::string_view utf8);

  // Scalar length of the indexed text.
  std::size_t size() const { return byte_offsets_.size() - 1; }

  // Byte offset of scalar position `pos` (pos == size() is the end).
  std::size_t byte_offset(std::size_t pos) const { return byte_offsets_[pos]; }

  std::string_view slice(std::string_view utf8, std::size_t start,
                         std::size_t end) const;

 private:
  std::vector<std::size_t> byte_offsets_;
};

}  // namespace unicode
}  // namespace legal_sbd

#endif  // LEGAL_SBD_UNICODE_H_
