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
#include <string>

#include "drfc/errors.hpp"

namespace drfc {

enum class ForwardRefMode : uint8_t {
  kOff = 0,
  kLinear = 1,     // heatmap-difference synthesizer
  kPatchWarp = 2,  // per-joint patch displacement synthesizer
  kExternal = 3,   // offline frames from a Y4M/PGM store
};

enum class ModeDecision : uint8_t { kSad = 0, kLagrangian = 1 };

struct EncoderConfig {
  int qp = 28;          // [0, 51]
  int gop_size = 32;    // >= 1; one I-frame then P-frames
  int search_range = 16;  // full-search window half-width, [1, 64] px
  ForwardRefMode forward_ref_mode = ForwardRefMode::kOff;
  ModeDecision mode_decision = ModeDecision::kSad;
  int patch_radius = 24;  // patch-warp coverage radius, >= 1
  int bump_radius = 4;    // heatmap kernel radius, >= 1

  static constexpr int kMbSize = 16;

  // Throws RangeError on any out-of-range field.
  void validate() const;
};

// True when frames of such a stream carry a 624-bit pose payload.
constexpr bool mode_carries_pose(ForwardRefMode m) {
  return m == ForwardRefMode::kLinear || m == ForwardRefMode::kPatchWarp;
}

std::string to_string(ForwardRefMode m);
ForwardRefMode parse_forward_mode(const std::string& name);  // without ":path" suffix

}  // namespace drfc
