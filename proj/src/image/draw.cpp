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

#include "v2r/image/draw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "v2r/error.hpp"

namespace v2r {
namespace {

struct Premul {
  double r = 0, g = 0, b = 0, a = 0;
};

Premul premultiply(const Rgba& p) {
  const double a = p.a / 255.0;
  return {p.r * a, p.g * a, p.b * a, static_cast<double>(p.a)};
}

std::uint8_t clamp_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

Rgba unpremultiply(const Premul& p) {
  if (p.a <= 0.5) return kTransparent;
  const double inv = 255.0 / p.a;
  return {clamp_byte(p.r * inv), clamp_byte(p.g * inv), clamp_byte(p.b * inv), clamp_byte(p.a)};
}

// Bilinear sample at continuous pixel-index coordinates (pixel centers are
// integers); samples outside the image are transparent.
Premul sample_transparent(const Image& src, double fx, double fy) {
  const int x0 = static_cast<int>(std::floor(fx));
  const int y0 = static_cast<int>(std::floor(fy));
  const double tx = fx - x0;
  const double ty = fy - y0;
  Premul acc;
  const std::array<std::pair<int, int>, 4> taps{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (const auto& [dx, dy] : taps) {
    const int x = x0 + dx;
    const int y = y0 + dy;
    if (!src.contains(x, y)) continue;
    const double w = (dx ? tx : 1 - tx) * (dy ? ty : 1 - ty);
    const Premul p = premultiply(src.at(x, y));
    acc.r += w * p.r;
    acc.g += w * p.g;
    acc.b += w * p.b;
    acc.a += w * p.a;
  }
  return acc;
}

Premul sample_clamped(const Image& src, double fx, double fy) {
  fx = std::clamp(fx, 0.0, src.width() - 1.0);
  fy = std::clamp(fy, 0.0, src.height() - 1.0);
  return sample_transparent(src, fx, fy);
}

Image rotate_quarter(const Image& src, int quarters) {
  const int w = src.width();
  const int h = src.height();
  switch (quarters) {
    case 1: {
      Image out(h, w);
      for (int y = 0; y < w; ++y)
        for (int x = 0; x < h; ++x) out.at(x, y) = src.at(y, h - 1 - x);
      return out;
    }
    case 2: {
      Image out(w, h);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) out.at(x, y) = src.at(w - 1 - x, h - 1 - y);
      return out;
    }
    case 3: {
      Image out(h, w);
      for (int y = 0; y < w; ++y)
        for (int x = 0; x < h; ++x) out.at(x, y) = src.at(w - 1 - y, x);
      return out;
    }
    default:
      return src;
  }
}

}  // namespace

void fill(Image& image, Rgba color) {
  std::fill(image.pixels().begin(), image.pixels().end(), color);
}

void fill_rect(Image& image, const Box& box, Rgba color) {
  const int x0 = std::max(box.x0, 0);
  const int y0 = std::max(box.y0, 0);
  const int x1 = std::min(box.x1, image.width());
  const int y1 = std::min(box.y1, image.height());
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) image.at(x, y) = color;
}

void fill_ellipse(Image& image, Point c, double rx, double ry, Rgba color) {
  if (rx <= 0 || ry <= 0) return;
  const int x0 = std::max(0, static_cast<int>(std::floor(c.x - rx)));
  const int x1 = std::min(image.width() - 1, static_cast<int>(std::ceil(c.x + rx)));
  const int y0 = std::max(0, static_cast<int>(std::floor(c.y - ry)));
  const int y1 = std::min(image.height() - 1, static_cast<int>(std::ceil(c.y + ry)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double dx = (x + 0.5 - c.x) / rx;
      const double dy = (y + 0.5 - c.y) / ry;
      if (dx * dx + dy * dy <= 1.0) image.at(x, y) = color;
    }
  }
}

void fill_disc(Image& image, Point center, double radius, Rgba color) {
  fill_ellipse(image, center, radius, radius, color);
}

void fill_polygon(Image& image, const std::vector<Point>& v, Rgba color) {
  if (v.size() < 3) return;
  double ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const int y0 = std::max(0, static_cast<int>(std::floor(ymin)));
  const int y1 = std::min(image.height() - 1, static_cast<int>(std::ceil(ymax)));
  std::vector<double> xs;
  for (int y = y0; y <= y1; ++y) {
    const double sy = y + 0.5;
    xs.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      if ((a.y <= sy && b.y > sy) || (b.y <= sy && a.y > sy)) {
        xs.push_back(a.x + (sy - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      // Pixels whose centers lie inside [xs[i], xs[i+1]).
      const int xa = std::max(0, static_cast<int>(std::ceil(xs[i] - 0.5)));
      const int xb = std::min(image.width() - 1, static_cast<int>(std::ceil(xs[i + 1] - 0.5)) - 1);
      for (int x = xa; x <= xb; ++x) image.at(x, y) = color;
    }
  }
}

void draw_line(Image& image, Point a, Point b, double thickness, Rgba color) {
  const double half = thickness / 2.0;
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - half)));
  const int x1 = std::min(image.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - half)));
  const int y1 = std::min(image.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half)));
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double px = x + 0.5;
      const double py = y + 0.5;
      double t = len2 > 0 ? ((px - a.x) * dx + (py - a.y) * dy) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double ex = px - (a.x + t * dx);
      const double ey = py - (a.y + t * dy);
      if (ex * ex + ey * ey <= half * half) image.at(x, y) = color;
    }
  }
}

void composite_over(Image& dst, const Image& src, int ox, int oy) {
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      const int dx = ox + x;
      const int dy = oy + y;
      if (!dst.contains(dx, dy)) continue;
      const Rgba s = src.at(x, y);
      if (s.a == 0) continue;
      Rgba& d = dst.at(dx, dy);
      if (s.a == 255) {
        d = s;
        continue;
      }
      const double sa = s.a / 255.0;
      const double da = d.a / 255.0;
      const double oa = sa + da * (1 - sa);
      auto mix = [&](std::uint8_t sc, std::uint8_t dc) {
        return clamp_byte((sc * sa + dc * da * (1 - sa)) / oa);
      };
      d = {mix(s.r, d.r), mix(s.g, d.g), mix(s.b, d.b), clamp_byte(oa * 255.0)};
    }
  }
}

Image resize_bilinear(const Image& src, int width, int height) {
  if (width <= 0 || height <= 0) throw InvalidArgument("resize to empty image");
  if (src.empty()) throw InvalidArgument("resize of empty image");
  if (width == src.width() && height == src.height()) return src;
  Image out(width, height);
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      // Box-average several bilinear taps when shrinking to limit aliasing.
      const int nx = std::max(1, static_cast<int>(std::ceil(sx)));
      const int ny = std::max(1, static_cast<int>(std::ceil(sy)));
      Premul acc;
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          const double fx = (x + (i + 0.5) / nx) * sx - 0.5;
          const double fy = (y + (j + 0.5) / ny) * sy - 0.5;
          const Premul p = sample_clamped(src, fx, fy);
          acc.r += p.r;
          acc.g += p.g;
          acc.b += p.b;
          acc.a += p.a;
        }
      }
      const double n = nx * ny;
      out.at(x, y) = unpremultiply({acc.r / n, acc.g / n, acc.b / n, acc.a / n});
    }
  }
  return out;
}

Image rotate_bilinear(const Image& src, double degrees) {
  double deg = std::fmod(degrees, 360.0);
  if (deg < 0) deg += 360.0;
  if (std::fmod(deg, 90.0) == 0.0) return rotate_quarter(src, static_cast<int>(deg / 90.0));

  const double theta = deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double w = src.width();
  const double h = src.height();
  const int ow = static_cast<int>(std::ceil(std::abs(w * c) + std::abs(h * s) - 1e-9));
  const int oh = static_cast<int>(std::ceil(std::abs(w * s) + std::abs(h * c) - 1e-9));
  Image out(ow, oh);
  const double ocx = ow / 2.0;
  const double ocy = oh / 2.0;
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      const double dx = x + 0.5 - ocx;
      const double dy = y + 0.5 - ocy;
      // Inverse of the clockwise (y-down) rotation.
      const double sx = dx * c + dy * s + w / 2.0 - 0.5;
      const double sy = -dx * s + dy * c + h / 2.0 - 0.5;
      out.at(x, y) = unpremultiply(sample_transparent(src, sx, sy));
    }
  }
  return out;
}

void gaussian_blur(Image& image, double sigma) {
  if (sigma <= 0 || image.empty()) return;
  const int radius = static_cast<int>(std::ceil(3 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-(i * i) / (2 * sigma * sigma));
    sum += kernel[i + radius];
  }
  for (auto& k : kernel) k /= sum;

  const int w = image.width();
  const int h = image.height();
  std::vector<std::array<double, 4>> tmp(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::array<double, 4> acc{};
      for (int i = -radius; i <= radius; ++i) {
        const Rgba p = image.at(std::clamp(x + i, 0, w - 1), y);
        const double k = kernel[i + radius];
        acc[0] += k * p.r;
        acc[1] += k * p.g;
        acc[2] += k * p.b;
        acc[3] += k * p.a;
      }
      tmp[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::array<double, 4> acc{};
      for (int i = -radius; i <= radius; ++i) {
        const auto& p = tmp[static_cast<std::size_t>(std::clamp(y + i, 0, h - 1)) * w + x];
        const double k = kernel[i + radius];
        for (int ch = 0; ch < 4; ++ch) acc[ch] += k * p[ch];
      }
      image.at(x, y) = {clamp_byte(acc[0]), clamp_byte(acc[1]), clamp_byte(acc[2]), clamp_byte(acc[3])};
    }
  }
}

}  // namespace v2r
