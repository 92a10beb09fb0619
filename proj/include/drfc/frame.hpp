/*
Copyright 2026 the drfc authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "drfc/errors.hpp"

namespace drfc {

enum class ChromaFormat : uint8_t { kMono = 0, kC420 = 1 };

inline constexpr int kMacroblockSize = 16;

// One 8-bit sample plane, row-major.
struct Plane8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> samples;

  Plane8() = default;
  Plane8(int w, int h, uint8_t fill = 0)
      : width(w), height(h), samples(size_t(w) * size_t(h), fill) {}

  uint8_t at(int x, int y) const { return samples[size_t(y) * width + x]; }
  uint8_t& at(int x, int y) { return samples[size_t(y) * width + x]; }
  // Edge-clamped read, defined for any (x, y).
  uint8_t at_clamped(int x, int y) const;
  const uint8_t* row(int y) const { return samples.data() + size_t(y) * width; }
  uint8_t* row(int y) { return samples.data() + size_t(y) * width; }

  bool operator==(const Plane8&) const = default;
};

// Planar 8-bit frame: luma plus optional 4:2:0 chroma.
struct Frame {
  int width = 0;
  int height = 0;
  ChromaFormat format = ChromaFormat::kMono;
  Plane8 luma;
  Plane8 cb;
  Plane8 cr;

  Frame() = default;
  Frame(int w, int h, ChromaFormat fmt, uint8_t luma_fill = 0, uint8_t chroma_fill = 128);

  int chroma_width() const { return (width + 1) / 2; }
  int chroma_height() const { return (height + 1) / 2; }
  bool has_chroma() const { return format == ChromaFormat::kC420; }

  // Checks the plane geometry invariants; throws DimensionError.
  void validate() const;

  bool operator==(const Frame&) const = default;
};

// Pixel-aligned block geometry. Codec blocks are 16x16 or 8x8.
struct BlockRect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  bool operator==(const BlockRect&) const = default;
};

// Rounds dimensions up to multiples of 16 by edge-sample replication.
// The original region is unchanged; callers keep the pre-padding size
// for output cropping. Idempotent.
Frame pad_to_macroblock(const Frame& f);

// Crops the top-left (w, h) region; inverse of pad_to_macroblock.
Frame crop_frame(const Frame& f, int w, int h);

// Raster-order 16x16 macroblocks tiling a padded frame exactly once.
// Rejects dimensions that are not multiples of 16.
std::vector<BlockRect> partition_frame(int width, int height);

}  // namespace drfc
