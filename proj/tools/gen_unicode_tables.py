#!/usr/bin/env python3
# Copyright 2026 The Legal SBD Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Usage: python3 tools/gen_unicode_tables.py > src/unicode_tables.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def emit_ranges(name, rs):
    print(f"constexpr CodepointRange {name}[] = {{")
    for lo, hi in rs:
        print(f"    {{0x{lo:X}, 0x{hi:X}}},")
    print("};")
    print()


LICENSE_HEADER = """// Copyright 2026 The Legal SBD Authors.
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
// limitations under the License."""


def main():
    print(LICENSE_HEADER + "\n")
    print("// Generated by tools/gen_unicode_tables.py from Unicode "
          f"{unicodedata.unidata_version}. Do not edit.")
    print()
    emit_ranges("kLetterRanges",
                ranges(lambda c: unicodedata.category(c).startswith("L")
                       or unicodedata.category(c) == "Mn"))
    emit_ranges("kDigitRanges", ranges(lambda c: unicodedata.category(c) == "Nd"))
    emit_ranges("kSpaceRanges", ranges(lambda c: c.isspace()))
    emit_ranges("kLowerRanges", ranges(lambda c: c.islower()))
    emit_ranges("kUpperRanges", ranges(lambda c: c.isupper()))

    print("constexpr LowerMapping kLowerMappings[] = {")
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        low = c.lower()
        if low == c:
            continue
        second = ord(low[1]) if len(low) > 1 else 0
        assert len(low) <= 2, hex(cp)
        print(f"    {{0x{cp:X}, 0x{ord(low[0]):X}, 0x{second:X}}},")
    print("};")


if __name__ == "__main__":
    sys.exit(main())
