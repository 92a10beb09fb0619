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

#include "drfc/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "drfc/transform.hpp"

namespace drfc {

namespace {

// Base offsets from the figure center plus per-joint wiggle factors
// (fractions of the motion amplitude) and phases. Joint order matches
// JointId: head, shoulders, elbows, wrists, hips, knees, ankles.
struct JointDef {
  double bx, by;
  double wiggle_x, wiggle_y;
  double phase;
};

constexpr JointDef kSkeleton[kJointCount] = {
    {0, -34, 0.00, 0.10, 0.0},                                  // head
    {-10, -24, 0.05, 0.00, 1.0},  {10, -24, 0.05, 0.00, -1.0},  // shoulders
    {-16, -12, 0.25, 0.00, 1.0},  {16, -12, 0.25, 0.00, -1.0},  // elbows
    {-20, 0, 0.35, 0.10, 1.3},    {20, 0, 0.35, 0.10, -1.3},    // wrists
    {-7, 0, 0.00, 0.00, 0.0},     {7, 0, 0.00, 0.00, 0.0},      // hips
    {-8, 16, 0.00, 0.20, 2.0},    {8, 16, 0.00, 0.20, -2.0},    // knees
    {-9, 32, 0.00, 0.30, 2.3},    {9, 32, 0.00, 0.30, -2.3},    // ankles
};

constexpr std::pair<int, int> kBones[] = {
    {0, 1}, {0, 2}, {1, 2},                    // head and shoulder line
    {1, 3}, {3, 5}, {2, 4}, {4, 6},            // arms
    {1, 7}, {2, 8}, {7, 8},                    // torso
    {7, 9}, {9, 11}, {8, 10}, {10, 12},        // legs
};

double amplitude(MotionClass m) {
  switch (m) {
    case MotionClass::kSlow: return 2.5;
    case MotionClass::kModerate: return 10.0;
    case MotionClass::kFast: return 20.0;
  }
  return 20.0;
}

uint8_t texture_byte(uint32_t seed, uint32_t a, uint32_t b, uint32_t c) {
  Lcg32 g(seed ^ (a * 0x9E3779B9u) ^ (b * 0x85EBCA6Bu) ^ (c * 0xC2B2AE35u));
  g.next();
  return g.next_byte();
}

void draw_disc(Plane8& img, uint32_t seed, int joint, double x, double y, int radius) {
  const int cx = iround(x);
  const int cy = iround(y);
  const int r2 = radius * radius;
  for (int py = std::max(0, cy - radius); py <= std::min(img.height - 1, cy + radius); ++py) {
    for (int px = std::max(0, cx - radius); px <= std::min(img.width - 1, cx + radius); ++px) {
      const int u = px - cx;
      const int v = py - cy;
      if (u * u + v * v > r2) continue;
      img.at(px, py) =
          uint8_t(96 + texture_byte(seed, uint32_t(joint + 1), uint32_t(u + 64),
                                    uint32_t(v + 64)) % 140);
    }
  }
}

void draw_bone(Plane8& img, int bone, double x0, double y0, double x1, double y1,
               double half_w) {
  const double vx = x1 - x0;
  const double vy = y1 - y0;
  const double len2 = vx * vx + vy * vy;
  const double len = std::sqrt(len2);
  const int lo_x = std::max(0, int(std::floor(std::min(x0, x1) - half_w)));
  const int hi_x = std::min(img.width - 1, int(std::ceil(std::max(x0, x1) + half_w)));
  const int lo_y = std::max(0, int(std::floor(std::min(y0, y1) - half_w)));
  const int hi_y = std::min(img.height - 1, int(std::ceil(std::max(y0, y1) + half_w)));
  for (int py = lo_y; py <= hi_y; ++py) {
    for (int px = lo_x; px <= hi_x; ++px) {
      const double rx = px - x0;
      const double ry = py - y0;
      const double t = len2 > 0.0 ? std::clamp((rx * vx + ry * vy) / len2, 0.0, 1.0) : 0.0;
      const double dx = rx - t * vx;
      const double dy = ry - t * vy;
      if (dx * dx + dy * dy > half_w * half_w) continue;
      const int along = iround(t * len);
      img.at(px, py) = uint8_t(40 + 28 * ((along >> 2) & 3) + (bone * 13) % 40);
    }
  }
}

}  // namespace

MotionClass parse_motion_class(const std::string& name) {
  if (name == "slow") return MotionClass::kSlow;
  if (name == "moderate") return MotionClass::kModerate;
  if (name == "fast") return MotionClass::kFast;
  throw InputError("unknown motion class: " + name);
}

SyntheticSequence generate_synthetic(const SyntheticSpec& spec) {
  if (spec.width < 16 || spec.height < 16)
    throw DimensionError("synthetic frames must be at least 16x16");
  if (spec.frame_count < 1) throw RangeError("synthetic sequence needs at least one frame");

  const double scale = std::min(spec.width, spec.height) / 128.0;
  const double amp = amplitude(spec.motion) * scale;
  const double omega = 2.0 * std::acos(-1.0) / 16.0;  // 16-frame period
  const double center_x = spec.width / 2.0;
  const double center_y = spec.height * 0.45;
  const int disc_radius = std::max(2, iround(5.0 * scale));
  const double bone_half_w = std::max(1.5, 2.5 * scale);

  // Static background: a smooth field, bilinear over a coarse LCG grid.
  Plane8 background(spec.width, spec.height);
  {
    constexpr int kGrid = 32;
    const int gw = spec.width / kGrid + 2;
    const int gh = spec.height / kGrid + 2;
    std::vector<uint8_t> grid(size_t(gw) * size_t(gh));
    Lcg32 rng(spec.seed);
    for (uint8_t& v : grid) v = uint8_t(48 + rng.next_byte() % 160);
    for (int y = 0; y < spec.height; ++y) {
      const int gy = y / kGrid, fy = y % kGrid;
      for (int x = 0; x < spec.width; ++x) {
        const int gx = x / kGrid, fx = x % kGrid;
        const int v00 = grid[size_t(gy) * gw + gx];
        const int v10 = grid[size_t(gy) * gw + gx + 1];
        const int v01 = grid[size_t(gy + 1) * gw + gx];
        const int v11 = grid[size_t(gy + 1) * gw + gx + 1];
        const int top = v00 * (kGrid - fx) + v10 * fx;
        const int bot = v01 * (kGrid - fx) + v11 * fx;
        background.at(x, y) = uint8_t((top * (kGrid - fy) + bot * fy) / (kGrid * kGrid));
      }
    }
  }

  SyntheticSequence out;
  out.poses.name = "synthetic";
  out.poses.width = spec.width;
  out.poses.height = spec.height;

  for (int t = 1; t <= spec.frame_count; ++t) {
    const double phase = omega * (t - 1);
    // Whole-figure sway, zero at t = 1 so displacement grows from the I-frame.
    const double gx = amp * std::sin(phase);
    const double gy = 0.35 * amp * (1.0 - std::cos(phase));

    Pose pose;
    for (int j = 0; j < kJointCount; ++j) {
      const JointDef& d = kSkeleton[j];
      const double wiggle = std::sin(phase + d.phase) - std::sin(d.phase);
      pose.joints[j].x = center_x + d.bx * scale + gx + d.wiggle_x * amp * wiggle;
      pose.joints[j].y = center_y + d.by * scale + gy + d.wiggle_y * amp * wiggle;
      if (pose.joints[j].x < 0 || pose.joints[j].y < 0 || pose.joints[j].x > kPoseCoordMax ||
          pose.joints[j].y > kPoseCoordMax)
        throw RangeError("synthetic figure left the valid coordinate range");
    }

    Frame frame(spec.width, spec.height, ChromaFormat::kMono);
    frame.luma = background;
    for (size_t b = 0; b < std::size(kBones); ++b) {
      const auto [j0, j1] = kBones[b];
      draw_bone(frame.luma, int(b), pose.joints[j0].x, pose.joints[j0].y, pose.joints[j1].x,
                pose.joints[j1].y, bone_half_w);
    }
    for (int j = 0; j < kJointCount; ++j)
      draw_disc(frame.luma, spec.seed, j, pose.joints[j].x, pose.joints[j].y, disc_radius);

    out.frames.push_back(std::move(frame));
    out.poses.frames.push_back(pose);
  }
  return out;
}

}  // namespace drfc
