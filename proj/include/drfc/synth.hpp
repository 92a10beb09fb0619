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

#include <filesystem>
#include <vector>

#include "drfc/config.hpp"
#include "drfc/frame.hpp"
#include "drfc/pose.hpp"

namespace drfc {

// Inputs to the forward-reference synthesizers. Poses enter in quantized
// form only, so encoder and decoder are forced onto bit-identical values.
struct SynthInputs {
  const Frame* i_frame = nullptr;  // decoded I-frame
  QuantizedPose pose_i;            // I-frame pose
  QuantizedPose pose_t;            // target-frame pose
};

// Per luma pixel: clamp(iframe + Ht - Hi, 0, 255), where Ht and Hi are the
// per-pixel channel maxima of the two pose heatmaps. Chroma is copied.
// Integer arithmetic throughout; pose_t == pose_i reproduces the I-frame.
Frame synthesize_linear(const SynthInputs& in, int bump_radius);

// Copies the I-frame, then for every pixel within patch_radius of a rounded
// target joint position reads the I-frame at the pixel minus that joint's
// rounded displacement (nearest joint wins, ties to the lowest joint index;
// source reads edge-clamped). Chroma follows the co-located luma decision
// with displacements halved, rounded half away from zero.
Frame synthesize_patchwarp(const SynthInputs& in, int patch_radius);

// Offline forward-reference frames: either a Y4M file (frame t = t-th frame,
// 1-based) or a directory of PGMs named frame_0001.pgm, frame_0002.pgm, ...
class ExternalFrameStore {
 public:
  static ExternalFrameStore open(const std::filesystem::path& path);

  // Returns the stored frame for 1-based index t. Throws MissingFrameError
  // when the index is absent and DimensionError when geometry or chroma
  // format disagree with the coded sequence.
  Frame load(int t, int width, int height, ChromaFormat fmt) const;

 private:
  ExternalFrameStore() = default;
  std::filesystem::path dir_;   // PGM-directory mode
  std::vector<Frame> frames_;   // Y4M mode, preloaded
  bool from_y4m_ = false;
};

Frame load_external_forward_frame(const ExternalFrameStore& store, int t, int width, int height,
                                  ChromaFormat fmt);

}  // namespace drfc
