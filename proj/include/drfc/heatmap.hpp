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

#include "drfc/frame.hpp"
#include "drfc/pose.hpp"

namespace drfc {

// One activation plane per joint. A plane peaks at 255 on the joint's
// rounded position when that position lies inside the frame, and is
// all-zero otherwise.
struct HeatmapStack {
  int width = 0;
  int height = 0;
  std::array<Plane8, kJointCount> channels;
};

// Rational bump kernel k(d^2) = max(0, round(255 * (R^2 - d^2) / R^2)),
// evaluated in integer arithmetic around each joint's rounded position.
HeatmapStack render_heatmaps(const Pose& pose, int width, int height, int bump_radius);

// Per-pixel maximum across the 13 channels, computed without materializing
// the stack. Byte-identical to folding render_heatmaps with max.
Plane8 render_heatmap_max(const Pose& pose, int width, int height, int bump_radius);

}  // namespace drfc
