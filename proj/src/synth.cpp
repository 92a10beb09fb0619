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

#include "drfc/synth.hpp"

#include <algorithm>
#include <cstdio>

#include "drfc/heatmap.hpp"
#include "drfc/pgm.hpp"
#include "drfc/transform.hpp"
#include "drfc/y4m.hpp"

namespace drfc {

Frame synthesize_linear(const SynthInputs& in, int bump_radius) {
  if (!in.i_frame) throw InputError("synthesize_linear: missing I-frame");
  const Frame& xi = *in.i_frame;
  xi.validate();
  const Pose pi = dequantize_pose(in.pose_i);
  const Pose pt = dequantize_pose(in.pose_t);

  const Plane8 hi = render_heatmap_max(pi, xi.width, xi.height, bump_radius);
  const Plane8 ht = render_heatmap_max(pt, xi.width, xi.height, bump_radius);

  Frame out = xi;  // chroma carried over unchanged
  for (size_t i = 0; i < out.luma.samples.size(); ++i) {
    const int v = int(xi.luma.samples[i]) + int(ht.samples[i]) - int(hi.samples[i]);
    out.luma.samples[i] = uint8_t(std::clamp(v, 0, 255));
  }
  return out;
}

namespace {

struct WarpJoint {
  int cx, cy;    // rounded target position
  int dx, dy;    // rounded displacement pose_t - pose_i
  int cdx, cdy;  // displacement halved for the chroma grid
};

// Nearest covering joint at luma position (x, y); ties go to the lowest
// joint index. Returns -1 when no joint covers the pixel.
int select_joint(const std::array<WarpJoint, kJointCount>& joints, int x, int y, int r2) {
  int best = -1;
  int best_d2 = r2 + 1;
  for (int j = 0; j < kJointCount; ++j) {
    const int ddx = x - joints[j].cx;
    const int ddy = y - joints[j].cy;
    const int d2 = ddx * ddx + ddy * ddy;
    if (d2 <= r2 && d2 < best_d2) {
      best = j;
      best_d2 = d2;
    }
  }
  return best;
}

}  // namespace

Frame synthesize_patchwarp(const SynthInputs& in, int patch_radius) {
  if (!in.i_frame) throw InputError("synthesize_patchwarp: missing I-frame");
  if (patch_radius < 1) throw RangeError("patch_radius must be >= 1");
  const Frame& xi = *in.i_frame;
  xi.validate();
  const Pose pi = dequantize_pose(in.pose_i);
  const Pose pt = dequantize_pose(in.pose_t);

  std::array<WarpJoint, kJointCount> joints;
  for (int j = 0; j < kJointCount; ++j) {
    const int dx = iround(pt.joints[j].x - pi.joints[j].x);
    const int dy = iround(pt.joints[j].y - pi.joints[j].y);
    joints[j] = {iround(pt.joints[j].x), iround(pt.joints[j].y), dx, dy, halve_round(dx),
                 halve_round(dy)};
  }
  const int r2 = patch_radius * patch_radius;

  Frame out = xi;
  for (int y = 0; y < xi.height; ++y) {
    for (int x = 0; x < xi.width; ++x) {
      const int j = select_joint(joints, x, y, r2);
      if (j >= 0) out.luma.at(x, y) = xi.luma.at_clamped(x - joints[j].dx, y - joints[j].dy);
    }
  }
  if (xi.has_chroma()) {
    // Coverage decided at the co-located luma sample, displacement halved.
    for (int y = 0; y < xi.cb.height; ++y) {
      for (int x = 0; x < xi.cb.width; ++x) {
        const int j = select_joint(joints, 2 * x, 2 * y, r2);
        if (j < 0) continue;
        out.cb.at(x, y) = xi.cb.at_clamped(x - joints[j].cdx, y - joints[j].cdy);
        out.cr.at(x, y) = xi.cr.at_clamped(x - joints[j].cdx, y - joints[j].cdy);
      }
    }
  }
  return out;
}

ExternalFrameStore ExternalFrameStore::open(const std::filesystem::path& path) {
  ExternalFrameStore store;
  if (std::filesystem::is_directory(path)) {
    store.dir_ = path;
    store.from_y4m_ = false;
  } else if (std::filesystem::is_regular_file(path)) {
    store.frames_ = read_y4m_file(path).frames;
    store.from_y4m_ = true;
  } else {
    throw InputError("external frame store not found: " + path.string());
  }
  return store;
}

Frame ExternalFrameStore::load(int t, int width, int height, ChromaFormat fmt) const {
  Frame f;
  if (from_y4m_) {
    if (t < 1 || size_t(t) > frames_.size())
      throw MissingFrameError("external store has no frame " + std::to_string(t));
    f = frames_[size_t(t) - 1];
  } else {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%04d.pgm", t);
    const auto path = dir_ / name;
    if (!std::filesystem::is_regular_file(path))
      throw MissingFrameError("external store has no frame " + std::to_string(t) + " (" +
                              path.string() + ")");
    f = read_pgm_file(path);
  }
  if (f.width != width || f.height != height || f.format != fmt)
    throw DimensionError("external frame " + std::to_string(t) +
                         ": dimensions or chroma format do not match the coded sequence");
  return f;
}

Frame load_external_forward_frame(const ExternalFrameStore& store, int t, int width, int height,
                                  ChromaFormat fmt) {
  return store.load(t, width, height, fmt);
}

}  // namespace drfc
