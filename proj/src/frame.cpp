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

#include "drfc/frame.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace drfc {

uint8_t Plane8::at_clamped(int x, int y) const {
  x = std::clamp(x, 0, width - 1);
  y = std::clamp(y, 0, height - 1);
  return samples[size_t(y) * width + x];
}

Frame::Frame(int w, int h, ChromaFormat fmt, uint8_t luma_fill, uint8_t chroma_fill)
    : width(w), height(h), format(fmt) {
  if (w <= 0 || h <= 0)
    throw DimensionError("frame dimensions must be positive, got " + std::to_string(w) + "x" +
                         std::to_string(h));
  luma = Plane8(w, h, luma_fill);
  if (fmt == ChromaFormat::kC420) {
    cb = Plane8(chroma_width(), chroma_height(), chroma_fill);
    cr = Plane8(chroma_width(), chroma_height(), chroma_fill);
  }
}

void Frame::validate() const {
  if (width <= 0 || height <= 0) throw DimensionError("frame dimensions must be positive");
  if (luma.width != width || luma.height != height ||
      luma.samples.size() != size_t(width) * size_t(height))
    throw DimensionError("luma plane geometry does not match frame dimensions");
  if (format == ChromaFormat::kC420) {
    const int cw = chroma_width(), ch = chroma_height();
    for (const Plane8* p : {&cb, &cr}) {
      if (p->width != cw || p->height != ch || p->samples.size() != size_t(cw) * size_t(ch))
        throw DimensionError("chroma plane geometry does not match 4:2:0 subsampling");
    }
  } else {
    if (!cb.samples.empty() || !cr.samples.empty())
      throw DimensionError("mono frame must not carry chroma planes");
  }
}

namespace {

Plane8 pad_plane(const Plane8& p, int new_w, int new_h) {
  Plane8 out(new_w, new_h);
  for (int y = 0; y < new_h; ++y) {
    const int sy = std::min(y, p.height - 1);
    const uint8_t* src = p.row(sy);
    uint8_t* dst = out.row(y);
    std::memcpy(dst, src, size_t(p.width));
    std::fill(dst + p.width, dst + new_w, src[p.width - 1]);
  }
  return out;
}

Plane8 crop_plane(const Plane8& p, int w, int h) {
  Plane8 out(w, h);
  for (int y = 0; y < h; ++y) std::memcpy(out.row(y), p.row(y), size_t(w));
  return out;
}

int round_up16(int v) { return (v + kMacroblockSize - 1) / kMacroblockSize * kMacroblockSize; }

}  // namespace

Frame pad_to_macroblock(const Frame& f) {
  f.validate();
  const int pw = round_up16(f.width);
  const int ph = round_up16(f.height);
  if (pw == f.width && ph == f.height) return f;
  Frame out;
  out.width = pw;
  out.height = ph;
  out.format = f.format;
  out.luma = pad_plane(f.luma, pw, ph);
  if (f.has_chroma()) {
    out.cb = pad_plane(f.cb, pw / 2, ph / 2);
    out.cr = pad_plane(f.cr, pw / 2, ph / 2);
  }
  return out;
}

Frame crop_frame(const Frame& f, int w, int h) {
  f.validate();
  if (w <= 0 || h <= 0 || w > f.width || h > f.height)
    throw DimensionError("crop region exceeds frame bounds");
  if (w == f.width && h == f.height) return f;
  Frame out;
  out.width = w;
  out.height = h;
  out.format = f.format;
  out.luma = crop_plane(f.luma, w, h);
  if (f.has_chroma()) {
    out.cb = crop_plane(f.cb, out.chroma_width(), out.chroma_height());
    out.cr = crop_plane(f.cr, out.chroma_width(), out.chroma_height());
  }
  return out;
}

std::vector<BlockRect> partition_frame(int width, int height) {
  if (width <= 0 || height <= 0 || width % kMacroblockSize != 0 || height % kMacroblockSize != 0)
    throw DimensionError("partition_frame requires positive multiples of 16, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  std::vector<BlockRect> blocks;
  blocks.reserve(size_t(width / kMacroblockSize) * size_t(height / kMacroblockSize));
  for (int y = 0; y < height; y += kMacroblockSize)
    for (int x = 0; x < width; x += kMacroblockSize)
      blocks.push_back({x, y, kMacroblockSize, kMacroblockSize});
  return blocks;
}

}  // namespace drfc
