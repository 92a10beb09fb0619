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

#include <array>
#include <cstdint>
#include <span>

#include "drfc/frame.hpp"

namespace drfc {

// Integer displacement from a current block to its reference read position:
// the prediction sample for (x, y) is ref(x + dx, y + dy), edge-clamped.
struct MotionVector {
  int dx = 0;
  int dy = 0;
  bool operator==(const MotionVector&) const = default;
};

struct SearchResult {
  MotionVector mv;
  uint32_t sad = 0;
};

// Whole-16x16 minimum and the four independent 8x8 quadrant minima,
// all taken over the same candidate window.
struct MbCandidates {
  SearchResult whole;
  std::array<SearchResult, 4> quad;  // raster order within the macroblock
};

// Reference plane expanded by `margin` on each side via edge replication,
// so candidate reads inside the search window never branch.
struct PaddedPlane {
  int width = 0;
  int height = 0;
  int margin = 0;
  int stride = 0;
  std::vector<uint8_t> samples;

  // (x, y) in unpadded plane coordinates; may extend `margin` outside.
  const uint8_t* ptr(int x, int y) const {
    return samples.data() + size_t(y + margin) * stride + size_t(x + margin);
  }
};

PaddedPlane pad_reference(const Plane8& plane, int margin);

// Sum of absolute differences; spans must have equal length.
uint64_t sad(std::span<const uint8_t> a, std::span<const uint8_t> b);
// SAD between two equal-sized in-bounds rectangles.
uint32_t sad_rect(const Plane8& a, const BlockRect& ra, const Plane8& b, const BlockRect& rb);

// Exhaustive integer-pixel search over dx, dy in [-range, range], reference
// reads edge-clamped. Ties go to smaller |dx|+|dy|, then smaller dy, then
// smaller dx.
SearchResult motion_search(const Plane8& src, const BlockRect& block, const Plane8& ref,
                           int range);

// Fused full search: one pass over the candidate window tracking the 16x16
// minimum and the four 8x8 quadrant minima, every minimum with the same
// tie-break rule as motion_search.
MbCandidates search_macroblock(const Plane8& src, int mb_x, int mb_y, const PaddedPlane& ref,
                               int range);

}  // namespace drfc
