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

#include "v2r/variation/assets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"
#include "v2r/image/png.hpp"

namespace v2r {

Asset Asset::from_image(std::string label, Image image) {
  if (label.empty()) throw InvalidArgument("asset label is empty");
  const auto box = opaque_box(image);
  if (!box) throw InvalidArgument("asset '" + label + "' has no opaque pixel");
  Asset a;
  a.label_ = std::move(label);
  a.raster_ = crop(image, *box);
  a.aspect_ = static_cast<double>(box->width()) / box->height();
  return a;
}

Asset Asset::procedural(std::string label, double aspect, Painter painter) {
  if (label.empty()) throw InvalidArgument("asset label is empty");
  if (!(aspect > 0)) throw InvalidArgument("asset aspect must be positive");
  Asset a;
  a.label_ = std::move(label);
  a.aspect_ = aspect;
  a.painter_ = std::move(painter);
  return a;
}

Image Asset::render(int side) const {
  if (side < 1) throw InvalidArgument("asset side must be >= 1");
  Image source = raster_;
  if (painter_) {
    // Supersample, then shrink, so small renders keep their shape.
    const int big = std::clamp(side * 4, 64, 2048);
    const int w = aspect_ >= 1 ? big : std::max(1, static_cast<int>(std::lround(big * aspect_)));
    const int h = aspect_ >= 1 ? std::max(1, static_cast<int>(std::lround(big / aspect_))) : big;
    Image canvas(w, h);
    painter_(canvas);
    const auto box = opaque_box(canvas);
    if (!box) throw InvalidArgument("asset '" + label_ + "' rendered nothing");
    source = crop(canvas, *box);
  }
  const double aspect = static_cast<double>(source.width()) / source.height();
  int w = side;
  int h = side;
  if (aspect >= 1) {
    h = std::max(1, static_cast<int>(std::lround(side / aspect)));
  } else {
    w = std::max(1, static_cast<int>(std::lround(side * aspect)));
  }
  return resize_bilinear(source, w, h);
}

namespace {

// Painting helpers in normalized [0, 1] box coordinates.
struct Pen {
  Image& img;

  Point at(double u, double v) const { return {u * img.width(), v * img.height()}; }
  void poly(std::initializer_list<std::pair<double, double>> pts, Rgba c) const {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back(at(x, y));
    fill_polygon(img, v, c);
  }
  void ellipse(double cu, double cv, double ru, double rv, Rgba c) const {
    fill_ellipse(img, at(cu, cv), ru * img.width(), rv * img.height(), c);
  }
  void fill_line(double u0, double v0, double u1, double v1, double t, Rgba c) const {
    draw_line(img, at(u0, v0), at(u1, v1), t * std::min(img.width(), img.height()), c);
  }
};

constexpr Rgba kArrowRed{200, 30, 30, 255};

}  // namespace

Asset builtin_arrow() {
  return Asset::procedural("right", 1.6, [](Image& img) {
    Pen{img}.poly({{0, 0.32}, {0.55, 0.32}, {0.55, 0}, {1, 0.5}, {0.55, 1}, {0.55, 0.68}, {0, 0.68}},
                  kArrowRed);
  });
}

std::vector<Asset> builtin_object_assets() {
  std::vector<Asset> out;
  out.push_back(Asset::procedural("shiba dog", 1.4, [](Image& img) {
    Pen p{img};
    const Rgba fur{214, 140, 62, 255};
    p.ellipse(0.45, 0.6, 0.3, 0.22, fur);
    p.ellipse(0.8, 0.35, 0.14, 0.2, fur);
    p.poly({{0.68, 0.25}, {0.72, 0.0}, {0.8, 0.18}}, fur);
    p.poly({{0.82, 0.18}, {0.9, 0.0}, {0.93, 0.25}}, fur);
    p.ellipse(0.95, 0.4, 0.05, 0.06, fur);
    p.fill_line(0.25, 0.78, 0.25, 1.0, 0.08, fur);
    p.fill_line(0.62, 0.78, 0.62, 1.0, 0.08, fur);
    p.fill_line(0.17, 0.5, 0.0, 0.3, 0.07, fur);
  }));
  out.push_back(Asset::procedural("cat", 1.3, [](Image& img) {
    Pen p{img};
    const Rgba gray{110, 110, 120, 255};
    p.ellipse(0.45, 0.62, 0.28, 0.2, gray);
    p.ellipse(0.78, 0.38, 0.13, 0.17, gray);
    p.poly({{0.67, 0.3}, {0.68, 0.0}, {0.76, 0.22}}, gray);
    p.poly({{0.8, 0.22}, {0.88, 0.0}, {0.9, 0.3}}, gray);
    p.fill_line(0.2, 0.6, 0.0, 0.15, 0.05, gray);
    p.fill_line(0.3, 0.75, 0.3, 1.0, 0.07, gray);
    p.fill_line(0.6, 0.75, 0.6, 1.0, 0.07, gray);
    p.ellipse(0.95, 0.42, 0.05, 0.03, gray);
  }));
  out.push_back(Asset::procedural("bear", 1.25, [](Image& img) {
    Pen p{img};
    const Rgba brown{110, 70, 40, 255};
    p.ellipse(0.42, 0.6, 0.36, 0.32, brown);
    p.ellipse(0.82, 0.35, 0.18, 0.22, brown);
    p.ellipse(0.72, 0.12, 0.07, 0.09, brown);
    p.ellipse(0.92, 0.12, 0.07, 0.09, brown);
    p.ellipse(0.06, 0.55, 0.06, 0.08, brown);
    p.fill_line(0.25, 0.8, 0.25, 1.0, 0.14, brown);
    p.fill_line(0.6, 0.8, 0.6, 1.0, 0.14, brown);
  }));
  out.push_back(Asset::procedural("eagle", 2.0, [](Image& img) {
    Pen p{img};
    const Rgba wing{80, 50, 30, 255};
    p.poly({{0, 0.1}, {0.45, 0.45}, {0.55, 0.45}, {1, 0.1}, {0.6, 0.65}, {0.4, 0.65}}, wing);
    p.ellipse(0.5, 0.6, 0.07, 0.25, wing);
    p.ellipse(0.5, 0.22, 0.06, 0.14, Rgba{245, 245, 240, 255});
    p.poly({{0.45, 0.8}, {0.55, 0.8}, {0.6, 1.0}, {0.4, 1.0}}, wing);
    p.poly({{0.48, 0.08}, {0.52, 0.08}, {0.5, 0.0}}, Rgba{230, 180, 30, 255});
  }));
  out.push_back(Asset::procedural("snake", 2.2, [](Image& img) {
    Pen p{img};
    const Rgba green{40, 140, 50, 255};
    const double t = 0.12;
    const int n = 48;
    for (int i = 0; i < n; ++i) {
      const double u0 = 0.06 + 0.82 * i / n;
      const double u1 = 0.06 + 0.82 * (i + 1) / n;
      const double v0 = 0.5 + 0.36 * std::sin(u0 * 2.5 * 6.2831853);
      const double v1 = 0.5 + 0.36 * std::sin(u1 * 2.5 * 6.2831853);
      p.fill_line(u0, v0, u1, v1, t, green);
    }
    p.ellipse(0.93, 0.5, 0.07, 0.12, green);
    p.fill_line(0.0, 0.5, 0.08, 0.5, 0.06, green);
    p.ellipse(0.5, 0.06, 0.02, 0.06, green);
    p.ellipse(0.5, 0.94, 0.02, 0.06, green);
  }));
  out.push_back(Asset::procedural("panda", 1.2, [](Image& img) {
    Pen p{img};
    const Rgba black{20, 20, 20, 255};
    const Rgba white{250, 250, 250, 255};
    p.ellipse(0.5, 0.62, 0.42, 0.36, black);
    p.ellipse(0.5, 0.62, 0.38, 0.32, white);
    p.ellipse(0.5, 0.3, 0.22, 0.22, black);
    p.ellipse(0.5, 0.3, 0.19, 0.19, white);
    p.ellipse(0.33, 0.1, 0.08, 0.1, black);
    p.ellipse(0.67, 0.1, 0.08, 0.1, black);
    p.ellipse(0.42, 0.3, 0.05, 0.06, black);
    p.ellipse(0.58, 0.3, 0.05, 0.06, black);
    p.ellipse(0.14, 0.68, 0.12, 0.14, black);
    p.ellipse(0.86, 0.68, 0.12, 0.14, black);
    p.ellipse(0.3, 0.93, 0.14, 0.07, black);
    p.ellipse(0.7, 0.93, 0.14, 0.07, black);
  }));
  out.push_back(Asset::procedural("turtle", 1.5, [](Image& img) {
    Pen p{img};
    const Rgba shell{60, 110, 50, 255};
    const Rgba skin{140, 170, 90, 255};
    p.ellipse(0.85, 0.5, 0.15, 0.14, skin);
    p.ellipse(0.25, 0.15, 0.08, 0.15, skin);
    p.ellipse(0.65, 0.15, 0.08, 0.15, skin);
    p.ellipse(0.25, 0.85, 0.08, 0.15, skin);
    p.ellipse(0.65, 0.85, 0.08, 0.15, skin);
    p.poly({{0.0, 0.5}, {0.12, 0.44}, {0.12, 0.56}}, skin);
    p.ellipse(0.45, 0.5, 0.35, 0.36, shell);
  }));
  out.push_back(Asset::procedural("fish", 1.8, [](Image& img) {
    Pen p{img};
    const Rgba blue{40, 110, 200, 255};
    p.ellipse(0.6, 0.5, 0.4, 0.36, blue);
    p.poly({{0.0, 0.0}, {0.3, 0.5}, {0.0, 1.0}}, blue);
    p.ellipse(0.82, 0.42, 0.04, 0.07, Rgba{250, 250, 250, 255});
  }));
  out.push_back(Asset::procedural("car", 2.0, [](Image& img) {
    Pen p{img};
    const Rgba red{190, 30, 40, 255};
    const Rgba tyre{25, 25, 25, 255};
    p.poly({{0.0, 0.45}, {1.0, 0.45}, {1.0, 0.82}, {0.0, 0.82}}, red);
    p.poly({{0.22, 0.45}, {0.32, 0.05}, {0.7, 0.05}, {0.8, 0.45}}, red);
    p.poly({{0.3, 0.42}, {0.37, 0.13}, {0.49, 0.13}, {0.49, 0.42}}, Rgba{170, 210, 240, 255});
    p.poly({{0.53, 0.42}, {0.53, 0.13}, {0.65, 0.13}, {0.72, 0.42}}, Rgba{170, 210, 240, 255});
    p.ellipse(0.24, 0.82, 0.1, 0.18, tyre);
    p.ellipse(0.76, 0.82, 0.1, 0.18, tyre);
  }));
  out.push_back(Asset::procedural("plane", 1.6, [](Image& img) {
    Pen p{img};
    const Rgba body{170, 175, 185, 255};
    p.ellipse(0.5, 0.5, 0.5, 0.1, body);
    p.poly({{0.4, 0.45}, {0.55, 0.45}, {0.35, 0.0}, {0.28, 0.0}}, body);
    p.poly({{0.4, 0.55}, {0.55, 0.55}, {0.35, 1.0}, {0.28, 1.0}}, body);
    p.poly({{0.0, 0.5}, {0.08, 0.5}, {0.05, 0.25}, {0.0, 0.25}}, body);
  }));
  return out;
}

std::vector<Asset> load_asset_bank(const std::filesystem::path& root, Task task) {
  namespace fs = std::filesystem;
  const fs::path dir = root / std::string(to_string(task));
  if (!fs::is_directory(dir)) throw IoError("asset directory not found: " + dir.string());
  std::map<std::pair<std::string, std::string>, fs::path> files;
  for (const auto& label_dir : fs::directory_iterator(dir)) {
    if (!label_dir.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(label_dir.path())) {
      if (f.path().extension() != ".png") continue;
      files[{label_dir.path().filename().string(), f.path().filename().string()}] = f.path();
    }
  }
  if (files.empty()) throw IoError("no assets under " + dir.string());
  std::vector<Asset> out;
  for (const auto& [key, path] : files) out.push_back(Asset::from_image(key.first, read_png(path)));
  return out;
}

Rgba parse_solid_color(const std::string& id) {
  std::string hex = id;
  if (hex.rfind("solid/", 0) == 0) hex = hex.substr(6);
  if (hex.size() != 6 ||
      !std::all_of(hex.begin(), hex.end(), [](unsigned char c) { return std::isxdigit(c); })) {
    throw InvalidArgument("malformed solid colour id '" + id + "'");
  }
  const auto v = std::stoul(hex, nullptr, 16);
  return {static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>((v >> 8) & 0xff),
          static_cast<std::uint8_t>(v & 0xff), 255};
}

void BackgroundBank::add_image(std::string id, Image image) {
  if (image.empty()) throw InvalidArgument("background '" + id + "' is empty");
  for (auto& px : image.pixels()) px.a = 255;
  images_.push_back({std::move(id), Background::Kind::kImage, kWhite, std::move(image)});
}

BackgroundBank BackgroundBank::from_directory(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  BackgroundBank bank;
  const fs::path dir = root / "images";
  if (!fs::is_directory(dir)) return bank;
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() == ".png") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) bank.add_image("images/" + f.stem().string(), read_png(f));
  return bank;
}

bool BackgroundBank::contains(const std::string& id) const {
  try {
    resolve(id);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

Background BackgroundBank::resolve(const std::string& id) const {
  if (id.rfind("solid/", 0) == 0) {
    return {id, Background::Kind::kSolid, parse_solid_color(id), {}};
  }
  for (const auto& bg : images_) {
    if (bg.id == id) return bg;
  }
  throw InvalidArgument("unknown background id '" + id + "'");
}

Image BackgroundBank::render(const std::string& id, Canvas canvas) const {
  const Background bg = resolve(id);
  if (bg.kind == Background::Kind::kSolid) return Image(canvas.width, canvas.height, bg.color);
  const double cover = std::max(static_cast<double>(canvas.width) / bg.image.width(),
                                static_cast<double>(canvas.height) / bg.image.height());
  const int w = std::max(canvas.width, static_cast<int>(std::ceil(bg.image.width() * cover)));
  const int h = std::max(canvas.height, static_cast<int>(std::ceil(bg.image.height() * cover)));
  const Image scaled = resize_bilinear(bg.image, w, h);
  const int x0 = (w - canvas.width) / 2;
  const int y0 = (h - canvas.height) / 2;
  return crop(scaled, Box{x0, y0, x0 + canvas.width, y0 + canvas.height});
}

}  // namespace v2r
