#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from Python's unicodedata.

The tokenizer classifies characters with two Unicode-derived sets:
general category P* (punctuation) and Zs (space separators). This script
emits them as sorted, merged [lo, hi] ranges for binary search.

Usage: python3 tools/generate_unicode_tables.py > src/unicode_tables.cpp
"""

import sys
import unicodedata


def collect(pred):
    ranges = []
    lo = None
    prev = None
    for cp in range(0x110000):
        if pred(chr(cp)):
            if lo is None:
                lo = cp
            prev = cp
        elif lo is not None:
            ranges.append((lo, prev))
            lo = None
    if lo is not None:
        ranges.append((lo, prev))
    return ranges


def emit(name, ranges, out):
    out.write(f"const CodepointRange {name}[] = {{\n")
    for i in range(0, len(ranges), 4):
        row = ", ".join(f"{{0x{lo:04X}, 0x{hi:04X}}}" for lo, hi in ranges[i : i + 4])
        out.write(f"    {row},\n")
    out.write("};\n")
    out.write(f"const std::size_t {name}_size = sizeof({name}) / sizeof({name}[0]);\n\n")


def main(out):
    punct = collect(lambda ch: unicodedata.category(ch).startswith("P"))
    space = collect(lambda ch: unicodedata.category(ch) == "Zs")
    out.write("// Generated by tools/generate_unicode_tables.py (unicodedata "
              f"{unicodedata.unidata_version}). Do not edit by hand.\n")
    out.write('#include "wordpiece/text_classify.hpp"\n\n')
    out.write("#include <cstddef>\n\n")
    out.write("namespace wordpiece::detail {\n\n")
    emit("kPunctuationRanges", punct, out)
    emit("kSpaceSeparatorRanges", space, out)
    out.write("}  // namespace wordpiece::detail\n")


if __name__ == "__main__":
    main(sys.stdout)
