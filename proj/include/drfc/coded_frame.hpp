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

#include <optional>
#include <vector>

#include "drfc/config.hpp"
#include "drfc/frame.hpp"
#include "drfc/motion.hpp"
#include "drfc/pose.hpp"
#include "drfc/transform.hpp"

namespace drfc {

enum class FrameType : uint8_t { kIntra = 0, kPredicted = 1 };

// Quantized 8x8 coefficient block plus its coded_block_flag.
struct CoeffBlock {
  bool coded = false;
  LevelArray levels{};
  bool operator==(const CoeffBlock&) const = default;
};

// One motion partition: the whole macroblock or one 8x8 quadrant.
// ref_index 0 reads the backward reference (decoded I-frame), 1 the
// forward reference.
struct PartitionDecision {
  int ref_index = 0;
  MotionVector mv;
  std::vector<CoeffBlock> luma;  // 4 transform blocks for 16x16, 1 for 8x8
  bool operator==(const PartitionDecision&) const = default;
};

struct MacroblockDecision {
  bool split = false;
  std::vector<PartitionDecision> parts;  // 1 unsplit, 4 split (raster order)
  std::vector<CoeffBlock> chroma;        // {cb, cr} in 4:2:0, else empty
  bool operator==(const MacroblockDecision&) const = default;
};

struct CodedFrame {
  FrameType type = FrameType::kIntra;
  std::optional<QuantizedPose> pose;
  // Intra payload: raster-order 8x8 blocks, luma then cb then cr.
  std::vector<CoeffBlock> intra_luma;
  std::vector<CoeffBlock> intra_cb;
  std::vector<CoeffBlock> intra_cr;
  // Predicted payload: raster-order macroblocks.
  std::vector<MacroblockDecision> mbs;
  bool operator==(const CodedFrame&) const = default;
};

// Geometry and flags shared by the frame serializer and the codec loop.
struct StreamParams {
  int width = 0;  // pre-padding
  int height = 0;
  int padded_width = 0;
  int padded_height = 0;
  ChromaFormat format = ChromaFormat::kMono;
  ForwardRefMode forward_mode = ForwardRefMode::kOff;

  static StreamParams make(int width, int height, ChromaFormat fmt, ForwardRefMode mode);

  bool forward_present() const { return forward_mode != ForwardRefMode::kOff; }
  bool pose_present() const { return mode_carries_pose(forward_mode); }
  int mb_cols() const { return padded_width / kMacroblockSize; }
  int mb_rows() const { return padded_height / kMacroblockSize; }
  int mb_count() const { return mb_cols() * mb_rows(); }
  int luma_block_count() const { return (padded_width / 8) * (padded_height / 8); }
  // 4:2:0 chroma planes are padded_width/2 x padded_height/2; one 8x8
  // chroma block per macroblock per plane.
  int chroma_block_count() const {
    return format == ChromaFormat::kC420 ? mb_count() : 0;
  }
};

}  // namespace drfc
