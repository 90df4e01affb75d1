#!/usr/bin/env python3
# Copyright 2026 The edumine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the Unicode tables under src/.

case_table.inc   simple (1:1) lowercase mappings
class_ranges.inc letter (L*) and punctuation/symbol (P*, S*) ranges
"""

import sys
import unicodedata

# str.lower() applies SpecialCasing; these code points have a different
# simple mapping in UnicodeData.txt.
SIMPLE_OVERRIDES = {0x0130: 0x0069}


def mappings():
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if cp in SIMPLE_OVERRIDES:
            yield cp, SIMPLE_OVERRIDES[cp]
            continue
        lower = chr(cp).lower()
        if len(lower) == 1 and ord(lower) != cp:
            yield cp, ord(lower)


def ranges(predicate):
    start = None
    for cp in range(0x110001):
        inside = cp < 0x110000 and predicate(cp)
        if inside and start is None:
            start = cp
        elif not inside and start is not None:
            yield start, cp - 1
            start = None


def write_ranges(out, name, items):
    out.write("inline constexpr CodeRange %s[] = {\n" % name)
    for i in range(0, len(items), 4):
        row = ", ".join("{0x%04X, 0x%04X}" % r for r in items[i:i + 4])
        out.write("    " + row + ",\n")
    out.write("};\n")


LICENSE = "".join(
    "//" + (" " + line[2:] if line[2:] else "") + "\n"
    for line in open(__file__, encoding="ascii").read().splitlines()[1:14])


def category(cp):
    return unicodedata.category(chr(cp))


def main(src_dir):
    pairs = list(mappings())
    with open(src_dir + "/case_table.inc", "w", encoding="ascii", newline="\n") as out:
        out.write(LICENSE + "\n")
        out.write("// Generated by tools/gen_case_table.py from Unicode %s. Do not edit.\n"
                  % unicodedata.unidata_version)
        out.write("// {upper, lower} pairs sorted by code point.\n")
        for i in range(0, len(pairs), 4):
            row = ", ".join("{0x%04X, 0x%04X}" % p for p in pairs[i:i + 4])
            out.write("    " + row + ",\n")
    letters = list(ranges(lambda cp: category(cp).startswith("L")))
    punct = list(ranges(lambda cp: category(cp)[0] in "PS"))
    with open(src_dir + "/class_ranges.inc", "w", encoding="ascii",
              newline="\n") as out:
        out.write(LICENSE + "\n")
        out.write("// Generated by tools/gen_case_table.py from Unicode %s. Do not edit.\n"
                  % unicodedata.unidata_version)
        write_ranges(out, "kLetterRanges", letters)
        write_ranges(out, "kPunctRanges", punct)
    print("%d mappings, %d letter ranges, %d punct ranges"
          % (len(pairs), len(letters), len(punct)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src")
