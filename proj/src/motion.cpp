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

#include "drfc/motion.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace drfc {

PaddedPlane pad_reference(const Plane8& plane, int margin) {
  PaddedPlane out;
  out.width = plane.width;
  out.height = plane.height;
  out.margin = margin;
  out.stride = plane.width + 2 * margin;
  out.samples.resize(size_t(out.stride) * size_t(plane.height + 2 * margin));
  for (int y = -margin; y < plane.height + margin; ++y) {
    const int sy = std::clamp(y, 0, plane.height - 1);
    uint8_t* dst = out.samples.data() + size_t(y + margin) * out.stride;
    std::fill(dst, dst + margin, plane.at(0, sy));
    std::memcpy(dst + margin, plane.row(sy), size_t(plane.width));
    std::fill(dst + margin + plane.width, dst + out.stride, plane.at(plane.width - 1, sy));
  }
  return out;
}

uint64_t sad(std::span<const uint8_t> a, std::span<const uint8_t> b) {
  if (a.size() != b.size())
    throw DimensionError("sad requires equal-sized blocks, got " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  uint64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += uint64_t(std::abs(int(a[i]) - int(b[i])));
  return s;
}

namespace {

inline uint32_t sad_wh(const uint8_t* a, int stride_a, const uint8_t* b, int stride_b, int w,
                       int h) {
  uint32_t s = 0;
  for (int y = 0; y < h; ++y) {
    const uint8_t* pa = a + size_t(y) * stride_a;
    const uint8_t* pb = b + size_t(y) * stride_b;
    for (int x = 0; x < w; ++x) s += uint32_t(std::abs(int(pa[x]) - int(pb[x])));
  }
  return s;
}

inline uint32_t sad_8x8(const uint8_t* a, int stride_a, const uint8_t* b, int stride_b) {
  uint32_t s = 0;
  for (int y = 0; y < 8; ++y) {
    const uint8_t* pa = a + size_t(y) * stride_a;
    const uint8_t* pb = b + size_t(y) * stride_b;
    for (int x = 0; x < 8; ++x) s += uint32_t(std::abs(int(pa[x]) - int(pb[x])));
  }
  return s;
}

struct Best {
  uint32_t sad = std::numeric_limits<uint32_t>::max();
  int dx = 0;
  int dy = 0;
};

// Tie order: smaller |dx|+|dy|, then smaller dy, then smaller dx.
inline bool better(uint32_t cand_sad, int dx, int dy, const Best& b) {
  if (cand_sad != b.sad) return cand_sad < b.sad;
  const int ca = std::abs(dx) + std::abs(dy);
  const int cb = std::abs(b.dx) + std::abs(b.dy);
  if (ca != cb) return ca < cb;
  if (dy != b.dy) return dy < b.dy;
  return dx < b.dx;
}

inline void consider(Best& b, uint32_t cand_sad, int dx, int dy) {
  if (better(cand_sad, dx, dy, b)) b = {cand_sad, dx, dy};
}

}  // namespace

uint32_t sad_rect(const Plane8& a, const BlockRect& ra, const Plane8& b, const BlockRect& rb) {
  if (ra.w != rb.w || ra.h != rb.h) throw DimensionError("sad_rect requires equal block sizes");
  if (ra.x < 0 || ra.y < 0 || ra.x + ra.w > a.width || ra.y + ra.h > a.height ||
      rb.x < 0 || rb.y < 0 || rb.x + rb.w > b.width || rb.y + rb.h > b.height)
    throw DimensionError("sad_rect block outside plane bounds");
  return sad_wh(a.row(ra.y) + ra.x, a.width, b.row(rb.y) + rb.x, b.width, ra.w, ra.h);
}

SearchResult motion_search(const Plane8& src, const BlockRect& block, const Plane8& ref,
                           int range) {
  if (src.width != ref.width || src.height != ref.height)
    throw DimensionError("motion_search reference dimensions must match the source");
  if (block.x < 0 || block.y < 0 || block.x + block.w > src.width ||
      block.y + block.h > src.height)
    throw DimensionError("motion_search block outside frame bounds");
  if (range < 0) throw RangeError("search range must be nonnegative");

  const PaddedPlane padded = pad_reference(ref, range);
  const uint8_t* s = src.row(block.y) + block.x;
  Best best;
  for (int dy = -range; dy <= range; ++dy)
    for (int dx = -range; dx <= range; ++dx) {
      const uint32_t c =
          sad_wh(s, src.width, padded.ptr(block.x + dx, block.y + dy), padded.stride, block.w,
                 block.h);
      consider(best, c, dx, dy);
    }
  return {{best.dx, best.dy}, best.sad};
}

MbCandidates search_macroblock(const Plane8& src, int mb_x, int mb_y, const PaddedPlane& ref,
                               int range) {
  const uint8_t* s = src.row(mb_y) + mb_x;
  const int ss = src.width;
  Best whole;
  Best quad[4];
  for (int dy = -range; dy <= range; ++dy)
    for (int dx = -range; dx <= range; ++dx) {
      const uint8_t* r = ref.ptr(mb_x + dx, mb_y + dy);
      const int rs = ref.stride;
      const uint32_t q0 = sad_8x8(s, ss, r, rs);
      const uint32_t q1 = sad_8x8(s + 8, ss, r + 8, rs);
      const uint32_t q2 = sad_8x8(s + size_t(8) * ss, ss, r + size_t(8) * rs, rs);
      const uint32_t q3 = sad_8x8(s + size_t(8) * ss + 8, ss, r + size_t(8) * rs + 8, rs);
      consider(whole, q0 + q1 + q2 + q3, dx, dy);
      consider(quad[0], q0, dx, dy);
      consider(quad[1], q1, dx, dy);
      consider(quad[2], q2, dx, dy);
      consider(quad[3], q3, dx, dy);
    }
  MbCandidates out;
  out.whole = {{whole.dx, whole.dy}, whole.sad};
  for (int k = 0; k < 4; ++k) out.quad[k] = {{quad[k].dx, quad[k].dy}, quad[k].sad};
  return out;
}

}  // namespace drfc
