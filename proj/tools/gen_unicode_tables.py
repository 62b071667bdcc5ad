#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from Python's unicodedata.

Emits three tables used by answer normalization:
  kPunctuationRanges  code point ranges of general category P*
  kWhitespace         code points for which str.isspace() is true
  kLowerMap           simple one-to-one lowercase mappings
"""
import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out, start = [], None
    for cp in range(MAX_CP):
        hit = pred(cp)
        if hit and start is None:
            start = cp
        elif not hit and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def main(path):
    punct = ranges(lambda cp: unicodedata.category(chr(cp)).startswith("P"))
    space = [cp for cp in range(MAX_CP) if chr(cp).isspace()]
    lower = []
    for cp in range(MAX_CP):
        c = chr(cp)
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = c.lower()
        if len(low) == 1 and low != c:
            lower.append((cp, ord(low)))
    with open(path, "w", encoding="ascii") as f:
        f.write("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
                % unicodedata.unidata_version)
        f.write("constexpr CodeRange kPunctuationRanges[] = {\n")
        for a, b in punct:
            f.write("    {0x%04X, 0x%04X},\n" % (a, b))
        f.write("};\n\nconstexpr char32_t kWhitespace[] = {\n")
        for cp in space:
            f.write("    0x%04X,\n" % cp)
        f.write("};\n\nconstexpr LowerPair kLowerMap[] = {\n")
        for a, b in lower:
            f.write("    {0x%04X, 0x%04X},\n" % (a, b))
        f.write("};\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/src/unicode_tables.inc")
