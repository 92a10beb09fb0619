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

#include "drfc/frame.hpp"
#include "drfc/pose_json.hpp"

namespace drfc {

// The pinned 32-bit LCG behind every synthetic texture.
struct Lcg32 {
  uint32_t state;
  explicit Lcg32(uint32_t seed) : state(seed) {}
  uint32_t next() {
    state = state * 1664525u + 1013904223u;
    return state;
  }
  uint8_t next_byte() { return uint8_t(next() >> 24); }
};

enum class MotionClass { kSlow, kModerate, kFast };

struct SyntheticSpec {
  int width = 128;
  int height = 128;
  int frame_count = 32;
  uint32_t seed = 1;
  MotionClass motion = MotionClass::kFast;
};

struct SyntheticSequence {
  std::vector<Frame> frames;  // mono
  PoseDocument poses;         // ground-truth joint centers per frame
};

// Deterministic test content: an LCG-textured static background and a
// 13-joint stick figure (textured discs at joints, bars along bones) on
// sinusoidal trajectories. Per-frame joint displacement is roughly 8, 4, or
// 1 px for fast, moderate, and slow motion; slow stays at or below 2 px.
SyntheticSequence generate_synthetic(const SyntheticSpec& spec);

MotionClass parse_motion_class(const std::string& name);

}  // namespace drfc
