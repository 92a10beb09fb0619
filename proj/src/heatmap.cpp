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

#include "drfc/heatmap.hpp"

#include <algorithm>

#include "drfc/transform.hpp"

namespace drfc {

namespace {

// Max-combines the bump kernel around (cx, cy) into the plane.
// k(d^2) = round(255 * (r^2 - d^2) / r^2) for d^2 < r^2, integer-only:
// the numerator is nonnegative there, so (510n + r^2) / (2 r^2) rounds
// half away from zero.
void stamp_bump(Plane8& plane, int cx, int cy, int radius) {
  const int r2 = radius * radius;
  const int y0 = std::max(0, cy - radius);
  const int y1 = std::min(plane.height - 1, cy + radius);
  const int x0 = std::max(0, cx - radius);
  const int x1 = std::min(plane.width - 1, cx + radius);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const int d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      if (d2 >= r2) continue;
      const int v = (510 * (r2 - d2) + r2) / (2 * r2);
      plane.at(x, y) = uint8_t(std::max<int>(plane.at(x, y), v));
    }
  }
}

struct RoundedJoint {
  int cx, cy;
  bool inside;
};

RoundedJoint round_joint(const JointXY& j, int width, int height) {
  const int cx = iround(j.x);
  const int cy = iround(j.y);
  return {cx, cy, cx >= 0 && cx < width && cy >= 0 && cy < height};
}

}  // namespace

HeatmapStack render_heatmaps(const Pose& pose, int width, int height, int bump_radius) {
  if (width <= 0 || height <= 0) throw DimensionError("heatmap canvas must be positive");
  if (bump_radius < 1) throw RangeError("bump_radius must be >= 1");
  HeatmapStack stack;
  stack.width = width;
  stack.height = height;
  for (int j = 0; j < kJointCount; ++j) {
    stack.channels[j] = Plane8(width, height, 0);
    const RoundedJoint rj = round_joint(pose.joints[j], width, height);
    if (rj.inside) stamp_bump(stack.channels[j], rj.cx, rj.cy, bump_radius);
  }
  return stack;
}

Plane8 render_heatmap_max(const Pose& pose, int width, int height, int bump_radius) {
  if (width <= 0 || height <= 0) throw DimensionError("heatmap canvas must be positive");
  if (bump_radius < 1) throw RangeError("bump_radius must be >= 1");
  Plane8 out(width, height, 0);
  for (int j = 0; j < kJointCount; ++j) {
    const RoundedJoint rj = round_joint(pose.joints[j], width, height);
    if (rj.inside) stamp_bump(out, rj.cx, rj.cy, bump_radius);
  }
  return out;
}

}  // namespace drfc
