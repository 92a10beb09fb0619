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

#include "drfc/bitio.hpp"
#include "drfc/coded_frame.hpp"

namespace drfc {

// .drf container layout (all multi-byte fields big-endian):
//   magic "DRFC" | version u8 | width u16 | height u16 | chroma u8 |
//   gop_size u8 | qp u8 | flags u8 | frame_count u32
// then one byte-aligned payload per frame, then a CRC-32 trailer (u32) over
// all decoded-reconstruction luma bytes.
// flags: bit0 = forward referencing present; bits1-2 = synth mode
// (0 linear, 1 patchwarp, 2 external) when bit0 is set; bits3-7 reserved 0.
inline constexpr std::array<uint8_t, 4> kContainerMagic = {'D', 'R', 'F', 'C'};
inline constexpr uint8_t kContainerVersion = 1;
inline constexpr size_t kContainerHeaderBytes = 17;

struct ContainerHeader {
  uint16_t width = 0;  // pre-padding dimensions
  uint16_t height = 0;
  ChromaFormat format = ChromaFormat::kMono;
  uint8_t gop_size = 32;
  uint8_t qp = 28;
  ForwardRefMode forward_mode = ForwardRefMode::kOff;
  uint32_t frame_count = 0;
  bool operator==(const ContainerHeader&) const = default;
};

void write_container_header(BitSink& sink, const ContainerHeader& h);
// Throws FormatError on bad magic, version, or field values.
ContainerHeader read_container_header(BitSource& src);

// Standard 8x8 zigzag scan order as raster indices (0, 1, 8, 16, 9, 2, ...).
const std::array<int, 64>& zigzag_order();

// Emitted after the last nonzero coefficient; unreachable as a run value.
inline constexpr uint64_t kEndOfBlock = 64;

// Run-level coding in zigzag order: ue(run), se(level != 0) per nonzero,
// then ue(64). An all-zero block emits nothing (the caller signals it with
// coded_block_flag = 0 and must not call the decoder for it).
void code_coeff_block(BitSink& sink, const LevelArray& levels);
LevelArray decode_coeff_block(BitSource& src);

// Frame payload: 1 bit frame_type (0 I, 1 P); optional 624-bit pose payload;
// for I, per plane raster 8x8 blocks each coded as cbf bit + coefficients;
// for P, per macroblock: split bit, then per partition a ref_index bit (only
// when forward referencing is present), se(dx), se(dy), and cbf+coefficients
// per owned 8x8 transform block, then in 4:2:0 one cb and one cr block.
// Zero-padded to a byte boundary.
void write_frame(BitSink& sink, const CodedFrame& f, const StreamParams& p);
// Throws CorruptionError naming the 1-based frame index on truncation or
// malformed data.
CodedFrame read_frame(BitSource& src, const StreamParams& p, int frame_index);

// Exact serialized size of one partition's (ref_index, mv) signaling.
int partition_signal_bits(bool forward_present, const MotionVector& mv);

}  // namespace drfc
