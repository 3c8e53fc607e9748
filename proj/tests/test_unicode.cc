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

#include "doctest.h"
#include "legal_sbd/unicode.h"

namespace legal_sbd::unicode {

TEST_CASE("utf8 decode and encode round trip") {
  const std::string s = "entré à l'école \xE2\x80\x99 \xF0\x9F\x98\x80";
  const std::u32string cps = decode_utf8(s);
  CHECK(cps.size() == length(s));
  CHECK(encode_utf8(cps) == s);
  CHECK(is_valid_utf8(s));
}

TEST_CASE("malformed bytes decode to replacement characters") {
  const std::string bad = "a\xC3(b\xFF";
  CHECK_FALSE(is_valid_utf8(bad));
  const std::u32string cps = decode_utf8(bad);
  REQUIRE(cps.size() == 5);
  CHECK(cps[1] == kReplacementChar);
  CHECK(cps[4] == kReplacementChar);
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));  // encoded surrogate
  CHECK_FALSE(is_valid_utf8("\xC0\xAF"));      // overlong
}

TEST_CASE("character classes") {
  CHECK(is_letter(U'é'));
  CHECK(is_letter(U'ß'));
  CHECK(is_letter(0x0301));  // combining acute accent
  CHECK(is_letter(0x4E2D));
  CHECK_FALSE(is_letter(U'1'));
  CHECK(is_digit(U'7'));
  CHECK(is_digit(0x0663));  // Arabic-Indic three
  CHECK_FALSE(is_digit(0x00B2));  // superscript two is not Nd
  CHECK(is_space(U' '));
  CHECK(is_space(0x00A0));
  CHECK(is_space(U'\n'));
  CHECK(is_newline(U'\r'));
  CHECK_FALSE(is_newline(0x2028));
  CHECK(is_upper(U'É'));
  CHECK(is_lower(U'ç'));
  CHECK_FALSE(is_lower(U'1'));
}

TEST_CASE("lowercasing") {
  CHECK(to_lower(std::string("École ÑANDÚ")) == "école ñandú");
  CHECK(to_lower(std::u32string(U"İ")) == std::u32string(U"i̇"));
  CHECK(to_lower(std::string("C'")) == "c'");
}

TEST_CASE("offset index slices by scalar value") {
  const std::string s = "àb€c";
  const OffsetIndex idx(s);
  CHECK(idx.size() == 4);
  CHECK(idx.slice(s, 0, 1) == "à");
  CHECK(idx.slice(s, 2, 4) == "€c");
  CHECK(idx.byte_offset(4) == s.size());
}

}  // namespace legal_sbd::unicode
