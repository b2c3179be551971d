#!/usr/bin/env python3
# Copyright 2026 The v2r Authors
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/image/font_data.cpp from DejaVu Sans Mono.

The table is checked in so builds never depend on system fonts; rerun this
only when changing the glyph size.
"""
import argparse
import pathlib

from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
SIZE = 16


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[1] / "src/image/font_data.cpp"))
    args = ap.parse_args()

    font = ImageFont.truetype(FONT, SIZE)
    ascent, descent = font.getmetrics()
    width = int(round(font.getlength("M")))
    height = ascent + descent
    rows = []
    for code in range(32, 127):
        img = Image.new("L", (width, height), 0)
        ImageDraw.Draw(img).text((0, 0), chr(code), font=font, fill=255, anchor="la")
        glyph = []
        for y in range(height):
            bits = 0
            for x in range(width):
                if img.getpixel((x, y)) >= 128:
                    bits |= 1 << x
            glyph.append(bits)
        rows.append((code, glyph))

    lines = [
        "// Generated by tools/gen_font.py from DejaVu Sans Mono "
        f"{SIZE}px (Bitstream Vera license). Do not edit.",
        "",
        '#include "v2r/image/font.hpp"',
        "",
        "namespace v2r::font_detail {",
        "",
        f"extern const int kGlyphWidth = {width};",
        f"extern const int kGlyphHeight = {height};",
        f"extern const int kGlyphBaseline = {ascent};",
        "",
        f"extern const unsigned short kGlyphs[95][{height}] = {{",
    ]
    for code, glyph in rows:
        body = ", ".join(f"0x{b:04x}" for b in glyph)
        lines.append(f"    {{{body}}},  // {chr(code)!r}")
    lines += ["};", "", "}  // namespace v2r::font_detail", ""]
    pathlib.Path(args.out).write_text("\n".join(lines))


if __name__ == "__main__":
    main()
