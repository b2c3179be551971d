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

#include "v2r/diagnostics/matrix.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "v2r/error.hpp"

namespace v2r {
namespace {

constexpr std::string_view kMagic = "VMAT1\n";
constexpr std::size_t kMaxHeader = 64;

void check(const Matrix& m) {
  if (m.data.size() != m.rows * m.cols) throw InvalidArgument("matrix: rows*cols != data length");
  for (float v : m.data) {
    if (!std::isfinite(v)) throw InvalidArgument("matrix: non-finite value");
  }
}

std::uint32_t to_le(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap32(v);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_vmat(const Matrix& m) {
  check(m);
  const std::string header = std::string(kMagic) + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + m.data.size() * 4);
  for (float v : m.data) {
    const std::uint32_t bits = to_le(std::bit_cast<std::uint32_t>(v));
    std::uint8_t b[4];
    std::memcpy(b, &bits, 4);
    out.insert(out.end(), b, b + 4);
  }
  return out;
}

Matrix decode_vmat(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() ||
      std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw FormatError("VMAT: bad magic");
  }
  std::size_t pos = kMagic.size();
  std::size_t nl = pos;
  while (nl < bytes.size() && bytes[nl] != '\n' && nl - pos < kMaxHeader) ++nl;
  if (nl >= bytes.size() || bytes[nl] != '\n') throw FormatError("VMAT: malformed header");
  const std::string header(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                           bytes.begin() + static_cast<std::ptrdiff_t>(nl));
  const auto space = header.find(' ');
  Matrix m;
  auto parse = [&](std::string_view s, std::size_t& v) {
    if (s.empty()) return false;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size();
  };
  if (space == std::string::npos || !parse(std::string_view(header).substr(0, space), m.rows) ||
      !parse(std::string_view(header).substr(space + 1), m.cols)) {
    throw FormatError("VMAT: malformed header '" + header + "'");
  }
  if (m.cols != 0 && m.rows > (SIZE_MAX / 4) / m.cols) throw FormatError("VMAT: dimensions overflow");
  const std::size_t count = m.rows * m.cols;
  const std::size_t payload = bytes.size() - (nl + 1);
  if (payload < count * 4) {
    throw FormatError("VMAT: truncated payload: expected " + std::to_string(count) + " floats, found " +
                      std::to_string(payload / 4));
  }
  if (payload > count * 4) throw FormatError("VMAT: trailing bytes after payload");
  m.data.resize(count);
  const std::uint8_t* p = bytes.data() + nl + 1;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t bits;
    std::memcpy(&bits, p + 4 * i, 4);
    const float v = std::bit_cast<float>(to_le(bits));
    if (!std::isfinite(v)) throw FormatError("VMAT: non-finite value at index " + std::to_string(i));
    m.data[i] = v;
  }
  return m;
}

void write_vmat(const Matrix& m, const std::filesystem::path& path) {
  const auto bytes = encode_vmat(m);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Matrix read_vmat(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return decode_vmat(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> read_lines_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> read_vocab(const std::filesystem::path& path) { return read_lines_file(path); }

}  // namespace v2r
