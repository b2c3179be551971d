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

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "v2r/core/types.hpp"
#include "v2r/image/image.hpp"

namespace v2r {

// A foreground object with a transparent background and a label.
class Asset {
 public:
  using Painter = std::function<void(Image& canvas)>;

  // Crops to the opaque bounding box. Throws InvalidArgument when the label is
  // empty or no pixel is opaque.
  static Asset from_image(std::string label, Image image);

  // Procedural asset drawn directly at the requested size; `aspect` is
  // width / height of its tight box.
  static Asset procedural(std::string label, double aspect, Painter painter);

  const std::string& label() const { return label_; }
  double aspect() const { return aspect_; }

  // Renders with the longer tight-box side equal to `side` pixels, cropped
  // to the opaque box.
  Image render(int side) const;

 private:
  Asset() = default;

  std::string label_;
  double aspect_ = 1.0;
  Image raster_;
  Painter painter_;
};

// Built-in arrow pointing right, labelled "right".
Asset builtin_arrow();

// Flat-colour silhouettes for the default object classes. These are
// stand-ins for offline runs and tests; real evaluations should load
// photographic cut-outs with load_asset_bank().
std::vector<Asset> builtin_object_assets();

// Loads `<root>/<task>/<label>/<name>.png`, sorted by (label, name).
std::vector<Asset> load_asset_bank(const std::filesystem::path& root, Task task);

struct Background {
  enum class Kind { kSolid, kImage };

  std::string id;
  Kind kind = Kind::kSolid;
  Rgba color = kWhite;
  Image image;
};

// Resolves context ids. `solid/<rrggbb>` ids are virtual and always
// resolvable; `images/<stem>` ids must be registered or loaded.
class BackgroundBank {
 public:
  void add_image(std::string id, Image image);

  // Registers every `<root>/images/*.png` as `images/<stem>`.
  static BackgroundBank from_directory(const std::filesystem::path& root);

  // Throws InvalidArgument for unknown ids or malformed solid colours.
  Background resolve(const std::string& id) const;
  bool contains(const std::string& id) const;

  // Canvas-sized rendering: solid fill, or cover-resize plus centre crop.
  Image render(const std::string& id, Canvas canvas) const;

 private:
  std::vector<Background> images_;
};

// Parses "solid/ff8800" (or a bare "ff8800"). Throws InvalidArgument.
Rgba parse_solid_color(const std::string& id);

}  // namespace v2r
