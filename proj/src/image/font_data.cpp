// Copyright 2026 The v2r Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_font.py from DejaVu Sans Mono 16px (Bitstream Vera license). Do not edit.

#include "v2r/image/font.hpp"

namespace v2r::font_detail {

extern const int kGlyphWidth = 10;
extern const int kGlyphHeight = 19;
extern const int kGlyphBaseline = 15;

extern const unsigned short kGlyphs[95][19] = {
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // ' '
    {0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0010, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // '!'
    {0x0000, 0x0000, 0x0000, 0x0048, 0x0048, 0x0048, 0x0048, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '"'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0090, 0x0090, 0x0098, 0x03fe, 0x0048, 0x0048, 0x004c, 0x01ff, 0x0024, 0x0024, 0x0026, 0x0000, 0x0000, 0x0000, 0x0000},  // '#'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x0084, 0x0004, 0x0004, 0x003c, 0x00f0, 0x0180, 0x0180, 0x0084, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // '$'
    {0x0000, 0x0000, 0x0000, 0x000e, 0x0012, 0x0011, 0x0012, 0x018e, 0x0060, 0x0018, 0x00e6, 0x0120, 0x0110, 0x0120, 0x00e0, 0x0000, 0x0000, 0x0000, 0x0000},  // '%'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x000c, 0x0004, 0x000c, 0x000c, 0x001c, 0x0132, 0x0122, 0x0163, 0x01c2, 0x00c6, 0x01bc, 0x0000, 0x0000, 0x0000, 0x0000},  // '&'
    {0x0000, 0x0000, 0x0000, 0x0010, 0x0010, 0x0010, 0x0010, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // "'"
    {0x0000, 0x0000, 0x0000, 0x0060, 0x0020, 0x0030, 0x0010, 0x0010, 0x0018, 0x0018, 0x0018, 0x0018, 0x0010, 0x0010, 0x0030, 0x0020, 0x0060, 0x0000, 0x0000},  // '('
    {0x0000, 0x0000, 0x0000, 0x0008, 0x0018, 0x0010, 0x0030, 0x0030, 0x0020, 0x0020, 0x0020, 0x0020, 0x0030, 0x0030, 0x0010, 0x0018, 0x0008, 0x0000, 0x0000},  // ')'
    {0x0000, 0x0000, 0x0000, 0x0010, 0x0010, 0x0094, 0x0078, 0x0078, 0x0094, 0x0010, 0x0010, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '*'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0010, 0x0010, 0x0010, 0x01fe, 0x0010, 0x0010, 0x0010, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '+'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0030, 0x0010, 0x0018, 0x0000},  // ','
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '-'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // '.'
    {0x0000, 0x0000, 0x0000, 0x0080, 0x00c0, 0x0040, 0x0060, 0x0020, 0x0030, 0x0010, 0x0018, 0x0008, 0x000c, 0x0004, 0x0004, 0x0006, 0x0000, 0x0000, 0x0000},  // '/'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0084, 0x0086, 0x0186, 0x01b6, 0x01b6, 0x0186, 0x0086, 0x0084, 0x00cc, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // '0'
    {0x0000, 0x0000, 0x0000, 0x0038, 0x0024, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x01fc, 0x0000, 0x0000, 0x0000, 0x0000},  // '1'
    {0x0000, 0x0000, 0x0000, 0x003c, 0x00c6, 0x00c0, 0x0080, 0x00c0, 0x00c0, 0x0060, 0x0030, 0x0018, 0x000c, 0x0004, 0x00fe, 0x0000, 0x0000, 0x0000, 0x0000},  // '2'
    {0x0000, 0x0000, 0x0000, 0x0038, 0x00c0, 0x00c0, 0x0080, 0x00c0, 0x0078, 0x00c0, 0x0080, 0x0080, 0x0080, 0x00c2, 0x007c, 0x0000, 0x0000, 0x0000, 0x0000},  // '3'
    {0x0000, 0x0000, 0x0000, 0x0060, 0x0060, 0x0050, 0x0058, 0x0048, 0x0044, 0x0046, 0x0042, 0x01fe, 0x0040, 0x0040, 0x0040, 0x0000, 0x0000, 0x0000, 0x0000},  // '4'
    {0x0000, 0x0000, 0x0000, 0x00fc, 0x0004, 0x0004, 0x0004, 0x003c, 0x00c0, 0x00c0, 0x0080, 0x0080, 0x00c0, 0x00c2, 0x003c, 0x0000, 0x0000, 0x0000, 0x0000},  // '5'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x008c, 0x0004, 0x0006, 0x007e, 0x00ce, 0x0086, 0x0186, 0x0186, 0x0084, 0x00cc, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // '6'
    {0x0000, 0x0000, 0x0000, 0x00fe, 0x00c0, 0x00c0, 0x0040, 0x0060, 0x0060, 0x0020, 0x0030, 0x0030, 0x0010, 0x0018, 0x0008, 0x0000, 0x0000, 0x0000, 0x0000},  // '7'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0086, 0x0086, 0x00c4, 0x0078, 0x00c4, 0x0086, 0x0186, 0x0086, 0x00c4, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // '8'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00c4, 0x0086, 0x0086, 0x0086, 0x0186, 0x01c4, 0x00b8, 0x0080, 0x0080, 0x0044, 0x0038, 0x0000, 0x0000, 0x0000, 0x0000},  // '9'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // ':'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0030, 0x0010, 0x0018, 0x0000},  // ';'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0100, 0x01e0, 0x0038, 0x000e, 0x000e, 0x0038, 0x01e0, 0x0100, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '<'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01fe, 0x0000, 0x0000, 0x01fe, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '='
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0002, 0x000e, 0x0078, 0x01c0, 0x01c0, 0x0078, 0x000e, 0x0002, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '>'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00c4, 0x00c0, 0x00c0, 0x0060, 0x0020, 0x0030, 0x0010, 0x0010, 0x0000, 0x0010, 0x0010, 0x0000, 0x0000, 0x0000, 0x0000},  // '?'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x018c, 0x0106, 0x01e2, 0x0192, 0x0119, 0x0109, 0x0109, 0x011b, 0x0192, 0x01e2, 0x0006, 0x000c, 0x00f0, 0x0000},  // '@'
    {0x0000, 0x0000, 0x0000, 0x0030, 0x0038, 0x0078, 0x0068, 0x0048, 0x004c, 0x00cc, 0x00c4, 0x00fe, 0x0186, 0x0182, 0x0103, 0x0000, 0x0000, 0x0000, 0x0000},  // 'A'
    {0x0000, 0x0000, 0x0000, 0x007e, 0x00c6, 0x0086, 0x0086, 0x00c6, 0x007e, 0x00c6, 0x0186, 0x0186, 0x0186, 0x00c6, 0x007e, 0x0000, 0x0000, 0x0000, 0x0000},  // 'B'
    {0x0000, 0x0000, 0x0000, 0x00f0, 0x008c, 0x0004, 0x0006, 0x0006, 0x0006, 0x0006, 0x0006, 0x0006, 0x0004, 0x008c, 0x00f0, 0x0000, 0x0000, 0x0000, 0x0000},  // 'C'
    {0x0000, 0x0000, 0x0000, 0x003e, 0x0066, 0x00c6, 0x0086, 0x0186, 0x0186, 0x0186, 0x0186, 0x0086, 0x00c6, 0x0066, 0x003e, 0x0000, 0x0000, 0x0000, 0x0000},  // 'D'
    {0x0000, 0x0000, 0x0000, 0x00fc, 0x0004, 0x0004, 0x0004, 0x0004, 0x00fc, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x01fc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'E'
    {0x0000, 0x0000, 0x0000, 0x01fc, 0x0004, 0x0004, 0x0004, 0x0004, 0x00fc, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0000, 0x0000, 0x0000, 0x0000},  // 'F'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x008c, 0x0004, 0x0006, 0x0006, 0x0002, 0x01e2, 0x0186, 0x0186, 0x0186, 0x018c, 0x00f8, 0x0000, 0x0000, 0x0000, 0x0000},  // 'G'
    {0x0000, 0x0000, 0x0000, 0x0186, 0x0186, 0x0186, 0x0186, 0x0186, 0x01fe, 0x0186, 0x0186, 0x0186, 0x0186, 0x0186, 0x0186, 0x0000, 0x0000, 0x0000, 0x0000},  // 'H'
    {0x0000, 0x0000, 0x0000, 0x00fc, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x00fc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'I'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x0040, 0x0040, 0x0040, 0x0040, 0x0040, 0x0040, 0x0040, 0x0040, 0x0040, 0x0062, 0x003c, 0x0000, 0x0000, 0x0000, 0x0000},  // 'J'
    {0x0000, 0x0000, 0x0000, 0x0186, 0x00c6, 0x0066, 0x0036, 0x001e, 0x001e, 0x0036, 0x0066, 0x0066, 0x00c6, 0x0186, 0x0186, 0x0000, 0x0000, 0x0000, 0x0000},  // 'K'
    {0x0000, 0x0000, 0x0000, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x01fc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'L'
    {0x0000, 0x0000, 0x0000, 0x0186, 0x01c6, 0x01ce, 0x01ca, 0x01ea, 0x01ba, 0x01b2, 0x01b2, 0x0182, 0x0182, 0x0182, 0x0182, 0x0000, 0x0000, 0x0000, 0x0000},  // 'M'
    {0x0000, 0x0000, 0x0000, 0x0186, 0x018e, 0x018e, 0x018e, 0x0196, 0x0196, 0x01b6, 0x01a6, 0x01a6, 0x01c6, 0x01c6, 0x01c6, 0x0000, 0x0000, 0x0000, 0x0000},  // 'N'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0086, 0x0086, 0x0186, 0x0186, 0x0186, 0x0186, 0x0086, 0x0086, 0x00cc, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // 'O'
    {0x0000, 0x0000, 0x0000, 0x007c, 0x00c4, 0x0184, 0x0184, 0x0184, 0x00c4, 0x007c, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x0000, 0x0000, 0x0000, 0x0000},  // 'P'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0086, 0x0086, 0x0186, 0x0186, 0x0186, 0x0186, 0x0086, 0x0086, 0x00cc, 0x0078, 0x0040, 0x00c0, 0x0000, 0x0000},  // 'Q'
    {0x0000, 0x0000, 0x0000, 0x007e, 0x00c6, 0x00c6, 0x0086, 0x0086, 0x00c6, 0x007e, 0x0046, 0x00c6, 0x0086, 0x0186, 0x0106, 0x0000, 0x0000, 0x0000, 0x0000},  // 'R'
    {0x0000, 0x0000, 0x0000, 0x0078, 0x00c4, 0x0006, 0x0006, 0x0006, 0x003c, 0x00f0, 0x0080, 0x0180, 0x0080, 0x00c6, 0x007c, 0x0000, 0x0000, 0x0000, 0x0000},  // 'S'
    {0x0000, 0x0000, 0x0000, 0x01ff, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // 'T'
    {0x0000, 0x0000, 0x0000, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x0086, 0x00c4, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // 'U'
    {0x0000, 0x0000, 0x0000, 0x0182, 0x0182, 0x0086, 0x0086, 0x00c4, 0x00c4, 0x004c, 0x0048, 0x0068, 0x0038, 0x0038, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // 'V'
    {0x0000, 0x0000, 0x0000, 0x0303, 0x0103, 0x0103, 0x0132, 0x0132, 0x01ba, 0x01aa, 0x01ea, 0x00ce, 0x00ce, 0x00cc, 0x00c4, 0x0000, 0x0000, 0x0000, 0x0000},  // 'W'
    {0x0000, 0x0000, 0x0000, 0x0186, 0x0084, 0x00cc, 0x0048, 0x0038, 0x0030, 0x0030, 0x0078, 0x004c, 0x00c4, 0x0186, 0x0103, 0x0000, 0x0000, 0x0000, 0x0000},  // 'X'
    {0x0000, 0x0000, 0x0000, 0x0182, 0x0086, 0x00c4, 0x004c, 0x0068, 0x0038, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // 'Y'
    {0x0000, 0x0000, 0x0000, 0x01fe, 0x0180, 0x00c0, 0x00c0, 0x0060, 0x0030, 0x0030, 0x0018, 0x0008, 0x000c, 0x0006, 0x01fe, 0x0000, 0x0000, 0x0000, 0x0000},  // 'Z'
    {0x0000, 0x0000, 0x0000, 0x0070, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0070, 0x0000, 0x0000},  // '['
    {0x0000, 0x0000, 0x0000, 0x0006, 0x0004, 0x0004, 0x000c, 0x0008, 0x0018, 0x0010, 0x0030, 0x0020, 0x0060, 0x0040, 0x00c0, 0x0080, 0x0000, 0x0000, 0x0000},  // '\\'
    {0x0000, 0x0000, 0x0000, 0x0038, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0038, 0x0000, 0x0000},  // ']'
    {0x0000, 0x0000, 0x0000, 0x0030, 0x0078, 0x00c4, 0x0182, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '^'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03ff},  // '_'
    {0x0000, 0x0000, 0x0008, 0x0018, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '`'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x00c4, 0x0080, 0x00f8, 0x0084, 0x0086, 0x00c6, 0x00c6, 0x00bc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'a'
    {0x0000, 0x0000, 0x0000, 0x0004, 0x0004, 0x0004, 0x0074, 0x00cc, 0x0084, 0x0184, 0x0184, 0x0184, 0x0084, 0x00cc, 0x0074, 0x0000, 0x0000, 0x0000, 0x0000},  // 'b'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00f0, 0x000c, 0x0004, 0x0004, 0x0004, 0x0004, 0x0004, 0x000c, 0x00f0, 0x0000, 0x0000, 0x0000, 0x0000},  // 'c'
    {0x0000, 0x0000, 0x0000, 0x0080, 0x0080, 0x0080, 0x00b8, 0x00c4, 0x00c6, 0x0086, 0x0086, 0x0086, 0x00c6, 0x00c4, 0x00b8, 0x0000, 0x0000, 0x0000, 0x0000},  // 'd'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0086, 0x0186, 0x01fe, 0x0006, 0x0006, 0x008c, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // 'e'
    {0x0000, 0x0000, 0x0000, 0x00e0, 0x0030, 0x0010, 0x00fc, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0000, 0x0000, 0x0000, 0x0000},  // 'f'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00b8, 0x00c4, 0x00c6, 0x0086, 0x0086, 0x0086, 0x00c6, 0x00c4, 0x00b8, 0x0080, 0x00c4, 0x0078, 0x0000},  // 'g'
    {0x0000, 0x0000, 0x0000, 0x0004, 0x0004, 0x0004, 0x0074, 0x00cc, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0000, 0x0000, 0x0000, 0x0000},  // 'h'
    {0x0000, 0x0000, 0x0000, 0x0030, 0x0030, 0x0000, 0x003c, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x01fe, 0x0000, 0x0000, 0x0000, 0x0000},  // 'i'
    {0x0000, 0x0000, 0x0000, 0x0020, 0x0020, 0x0000, 0x003c, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0030, 0x001e, 0x0000},  // 'j'
    {0x0000, 0x0000, 0x0000, 0x0004, 0x0004, 0x0004, 0x0084, 0x0044, 0x0024, 0x003c, 0x003c, 0x0064, 0x00c4, 0x0084, 0x0184, 0x0000, 0x0000, 0x0000, 0x0000},  // 'k'
    {0x0000, 0x0000, 0x0000, 0x001e, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x00e0, 0x0000, 0x0000, 0x0000, 0x0000},  // 'l'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00de, 0x01b2, 0x0132, 0x0132, 0x0132, 0x0132, 0x0132, 0x0132, 0x0132, 0x0000, 0x0000, 0x0000, 0x0000},  // 'm'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0074, 0x00cc, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0000, 0x0000, 0x0000, 0x0000},  // 'n'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x00cc, 0x0086, 0x0086, 0x0186, 0x0086, 0x0086, 0x00cc, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // 'o'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0076, 0x00ce, 0x0086, 0x0186, 0x0186, 0x0186, 0x0086, 0x00ce, 0x0076, 0x0006, 0x0006, 0x0006, 0x0000},  // 'p'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00b8, 0x00cc, 0x00c6, 0x0086, 0x0086, 0x0086, 0x00c6, 0x00cc, 0x00b8, 0x0080, 0x0080, 0x0080, 0x0000},  // 'q'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00e8, 0x0138, 0x0018, 0x0008, 0x0008, 0x0008, 0x0008, 0x0008, 0x0008, 0x0000, 0x0000, 0x0000, 0x0000},  // 'r'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x000c, 0x0004, 0x000c, 0x0078, 0x00c0, 0x0080, 0x00c4, 0x0078, 0x0000, 0x0000, 0x0000, 0x0000},  // 's'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0018, 0x0018, 0x00fe, 0x0018, 0x0018, 0x0018, 0x0018, 0x0018, 0x0018, 0x0010, 0x00f0, 0x0000, 0x0000, 0x0000, 0x0000},  // 't'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x0084, 0x00cc, 0x00b8, 0x0000, 0x0000, 0x0000, 0x0000},  // 'u'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0182, 0x0086, 0x0084, 0x00c4, 0x004c, 0x0048, 0x0068, 0x0038, 0x0030, 0x0000, 0x0000, 0x0000, 0x0000},  // 'v'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0303, 0x0103, 0x0102, 0x01b2, 0x01b2, 0x00ae, 0x00ee, 0x00cc, 0x00cc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'w'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0086, 0x00cc, 0x0068, 0x0038, 0x0030, 0x0038, 0x004c, 0x00c4, 0x0186, 0x0000, 0x0000, 0x0000, 0x0000},  // 'x'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0186, 0x0086, 0x0084, 0x00cc, 0x0048, 0x0068, 0x0078, 0x0030, 0x0030, 0x0010, 0x0018, 0x000e, 0x0000},  // 'y'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00fc, 0x00c0, 0x0060, 0x0060, 0x0030, 0x0018, 0x000c, 0x0004, 0x00fc, 0x0000, 0x0000, 0x0000, 0x0000},  // 'z'
    {0x0000, 0x0000, 0x0000, 0x00e0, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x0010, 0x001c, 0x0010, 0x0030, 0x0030, 0x0030, 0x0030, 0x0030, 0x00e0, 0x0000},  // '{'
    {0x0000, 0x0000, 0x0000, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010, 0x0010},  // '|'
    {0x0000, 0x0000, 0x0000, 0x001c, 0x0010, 0x0010, 0x0010, 0x0010, 0x0030, 0x0030, 0x00e0, 0x0030, 0x0030, 0x0010, 0x0010, 0x0010, 0x0010, 0x001c, 0x0000},  // '}'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x011e, 0x00e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},  // '~'
};

}  // namespace v2r::font_detail
