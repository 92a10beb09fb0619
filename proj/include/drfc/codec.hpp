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
#include <utility>

#include "drfc/coded_frame.hpp"
#include "drfc/container.hpp"
#include "drfc/synth.hpp"

namespace drfc {

// References available to a P-frame, both in the padded decoded domain.
struct ReferenceFrames {
  const Frame* backward = nullptr;  // decoded I-frame of the current GOP
  const Frame* forward = nullptr;   // synthesized or loaded forward frame
};

// Encoder-side working buffers for one P-frame, exposed for inspection.
struct PredictionBuffers {
  Frame backward_pred;   // motion compensation of every partition on the backward ref
  Frame forward_ref;     // the forward reference used (empty when absent)
  Frame final_pred;      // per-partition selection of the two references
  std::vector<int16_t> residual;        // source minus final prediction (luma)
  std::vector<int16_t> recon_residual;  // reconstructed residual (luma)
};

struct FrameStats {
  FrameType type = FrameType::kIntra;
  size_t bits = 0;  // serialized frame size including alignment padding
  std::vector<uint32_t> mb_sad;  // chosen prediction SAD per macroblock (P only)
  uint64_t total_sad = 0;
  uint32_t partitions = 0;
  uint32_t forward_partitions = 0;
};

struct EncodeStats {
  std::vector<FrameStats> frames;
};

// 0.85 * 2^((qp - 12) / 3), the motion/reference rate weight.
double lagrange_multiplier(int qp);

// Reference selection for one partition. SAD mode picks the lower SAD
// (ties to backward); Lagrangian mode picks the lower J = SAD + lambda *
// signal_bits with the exact serialized (ref, mv) cost.
struct RefChoice {
  int ref_index = 0;
  SearchResult sr;
  double cost = 0.0;  // SAD in SAD mode, J in Lagrangian mode
};
RefChoice select_reference(const SearchResult& backward,
                           const std::optional<SearchResult>& forward,
                           const EncoderConfig& cfg);

// Split decision over one macroblock's fused search results: split iff the
// four independent quadrant choices beat the 16x16 choice strictly.
struct PartitionPlan {
  bool split = false;
  RefChoice whole;
  std::array<RefChoice, 4> quads;
  uint32_t chosen_sad = 0;  // sum over chosen partitions
};
PartitionPlan decide_partitions(const MbCandidates& backward,
                                const std::optional<MbCandidates>& forward,
                                const EncoderConfig& cfg);

// Intra coding: every 8x8 block DCT -> quantize -> dequantize -> IDCT,
// no spatial prediction. The returned reconstruction is bit-exactly what
// decode_i_frame produces.
std::pair<CodedFrame, Frame> encode_i_frame(const Frame& padded, const EncoderConfig& cfg);
Frame decode_i_frame(const CodedFrame& f, int padded_width, int padded_height, ChromaFormat fmt,
                     int qp);

// Predictive coding against {backward, forward}: fused motion search per
// reference, reference selection, optional 8x8 split, residual transform.
// Chroma reuses the luma decisions with halved, rounded vectors.
std::pair<CodedFrame, Frame> encode_p_frame(const Frame& padded, const ReferenceFrames& refs,
                                            const EncoderConfig& cfg, FrameStats* stats = nullptr,
                                            PredictionBuffers* buffers = nullptr);
Frame decode_p_frame(const CodedFrame& f, const ReferenceFrames& refs, const StreamParams& p,
                     int qp);

// Builds the per-P-frame forward reference in the padded decoded domain.
// Shared verbatim by encoder and decoder, so regeneration is byte-exact.
Frame make_forward_reference(ForwardRefMode mode, const Frame& decoded_i_padded,
                             const QuantizedPose& pose_i, const QuantizedPose& pose_t,
                             int bump_radius, int patch_radius, const ExternalFrameStore* store,
                             int frame_index, int width, int height, ChromaFormat fmt);

struct EncodedSequence {
  std::vector<uint8_t> stream;          // the .drf container bytes
  std::vector<Frame> reconstructions;   // encoder-side recon, cropped
  EncodeStats stats;
};

// GOP loop: frame 1 of each GOP intra-coded, the rest P-frames referencing
// that GOP's decoded I-frame plus the per-frame forward reference. Poses are
// required (one per frame) for the linear and patchwarp modes; an external
// store is required for the external mode.
EncodedSequence encode_sequence(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                                const EncoderConfig& cfg,
                                const ExternalFrameStore* external = nullptr);

// Synthesis parameters are not carried in the container; they must match
// the encoder's configuration (defaults match EncoderConfig defaults).
struct DecoderOptions {
  int bump_radius = 4;
  int patch_radius = 24;
  const ExternalFrameStore* external = nullptr;
};

struct DecodedSequence {
  ContainerHeader header;
  std::vector<Frame> frames;  // cropped to pre-padding dimensions
};

// Decodes a .drf stream and verifies the CRC-32 trailer. Distinct errors for
// header mismatch (FormatError), truncation/corruption naming the frame
// index (CorruptionError), and a missing external store (InputError).
DecodedSequence decode_sequence(std::span<const uint8_t> stream, const DecoderOptions& opts = {});

}  // namespace drfc
