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

#include "drfc/container.hpp"

#include <string>

namespace drfc {

StreamParams StreamParams::make(int width, int height, ChromaFormat fmt, ForwardRefMode mode) {
  if (width <= 0 || height <= 0) throw DimensionError("stream dimensions must be positive");
  StreamParams p;
  p.width = width;
  p.height = height;
  p.padded_width = (width + kMacroblockSize - 1) / kMacroblockSize * kMacroblockSize;
  p.padded_height = (height + kMacroblockSize - 1) / kMacroblockSize * kMacroblockSize;
  p.format = fmt;
  p.forward_mode = mode;
  return p;
}

void write_container_header(BitSink& sink, const ContainerHeader& h) {
  if (h.width == 0 || h.height == 0) throw InputError("container header: zero dimensions");
  if (h.gop_size == 0) throw InputError("container header: gop_size must be >= 1");
  if (h.qp > 51) throw InputError("container header: qp must be <= 51");
  for (uint8_t m : kContainerMagic) sink.put_bits(m, 8);
  sink.put_bits(kContainerVersion, 8);
  sink.put_bits(h.width, 16);
  sink.put_bits(h.height, 16);
  sink.put_bits(uint8_t(h.format), 8);
  sink.put_bits(h.gop_size, 8);
  sink.put_bits(h.qp, 8);
  uint8_t flags = 0;
  if (h.forward_mode != ForwardRefMode::kOff) {
    flags = uint8_t(1u | ((uint8_t(h.forward_mode) - 1u) << 1));
  }
  sink.put_bits(flags, 8);
  sink.put_bits(h.frame_count, 32);
}

ContainerHeader read_container_header(BitSource& src) {
  for (uint8_t m : kContainerMagic) {
    if (src.get_bits(8) != m) throw FormatError("not a DRFC stream (bad magic)");
  }
  const uint64_t version = src.get_bits(8);
  if (version != kContainerVersion)
    throw FormatError("unsupported container version " + std::to_string(version));
  ContainerHeader h;
  h.width = uint16_t(src.get_bits(16));
  h.height = uint16_t(src.get_bits(16));
  if (h.width == 0 || h.height == 0) throw FormatError("container header: zero dimensions");
  const uint64_t chroma = src.get_bits(8);
  if (chroma > 1) throw FormatError("container header: unknown chroma format");
  h.format = ChromaFormat(chroma);
  h.gop_size = uint8_t(src.get_bits(8));
  if (h.gop_size == 0) throw FormatError("container header: gop_size must be >= 1");
  h.qp = uint8_t(src.get_bits(8));
  if (h.qp > 51) throw FormatError("container header: qp out of range");
  const uint64_t flags = src.get_bits(8);
  if (flags & ~0x07ull) throw FormatError("container header: reserved flag bits set");
  if (flags & 1) {
    const uint64_t mode = (flags >> 1) & 3;
    if (mode > 2) throw FormatError("container header: unknown synth mode");
    h.forward_mode = ForwardRefMode(uint8_t(mode + 1));
  } else {
    if (flags != 0) throw FormatError("container header: synth mode without forward flag");
    h.forward_mode = ForwardRefMode::kOff;
  }
  h.frame_count = uint32_t(src.get_bits(32));
  return h;
}

const std::array<int, 64>& zigzag_order() {
  static const std::array<int, 64> order = [] {
    std::array<int, 64> t{};
    int idx = 0;
    for (int s = 0; s <= 14; ++s) {
      if (s % 2 == 0) {
        // even diagonals run bottom-left to top-right
        for (int x = std::max(0, s - 7); x <= std::min(7, s); ++x) t[idx++] = (s - x) * 8 + x;
      } else {
        for (int x = std::min(7, s); x >= std::max(0, s - 7); --x) t[idx++] = (s - x) * 8 + x;
      }
    }
    return t;
  }();
  return order;
}

void code_coeff_block(BitSink& sink, const LevelArray& levels) {
  const auto& zz = zigzag_order();
  int run = 0;
  bool any = false;
  for (int pos = 0; pos < 64; ++pos) {
    const int32_t level = levels[zz[pos]];
    if (level == 0) {
      ++run;
      continue;
    }
    sink.put_ue(uint64_t(run));
    sink.put_se(level);
    run = 0;
    any = true;
  }
  if (any) sink.put_ue(kEndOfBlock);
}

LevelArray decode_coeff_block(BitSource& src) {
  const auto& zz = zigzag_order();
  LevelArray out{};
  int pos = -1;
  for (;;) {
    const uint64_t run = src.get_ue();
    if (run == kEndOfBlock) break;
    if (run > 63) throw CorruptionError("coefficient run exceeds the block");
    pos += int(run) + 1;
    if (pos > 63) throw CorruptionError("coefficient scan overrun");
    const int64_t level = src.get_se();
    if (level == 0) throw CorruptionError("zero level inside a run-level pair");
    if (level > INT32_MAX || level < INT32_MIN)
      throw CorruptionError("coefficient level out of range");
    out[zz[pos]] = int32_t(level);
  }
  if (pos < 0) throw CorruptionError("coded block without coefficients");
  return out;
}

int partition_signal_bits(bool forward_present, const MotionVector& mv) {
  return (forward_present ? 1 : 0) + se_bit_length(mv.dx) + se_bit_length(mv.dy);
}

namespace {

void write_plane_blocks(BitSink& sink, const std::vector<CoeffBlock>& blocks, size_t expected) {
  if (blocks.size() != expected)
    throw InputError("coded frame: wrong intra block count (" + std::to_string(blocks.size()) +
                     " vs " + std::to_string(expected) + ")");
  for (const CoeffBlock& b : blocks) {
    sink.put_bit(b.coded ? 1 : 0);
    if (b.coded) code_coeff_block(sink, b.levels);
  }
}

std::vector<CoeffBlock> read_plane_blocks(BitSource& src, size_t count) {
  std::vector<CoeffBlock> out(count);
  for (CoeffBlock& b : out) {
    b.coded = src.get_bit() != 0;
    if (b.coded) b.levels = decode_coeff_block(src);
  }
  return out;
}

MotionVector read_mv(BitSource& src) {
  const int64_t dx = src.get_se();
  const int64_t dy = src.get_se();
  if (dx < -64 || dx > 64 || dy < -64 || dy > 64)
    throw CorruptionError("motion vector outside the legal search range");
  return {int(dx), int(dy)};
}

}  // namespace

void write_frame(BitSink& sink, const CodedFrame& f, const StreamParams& p) {
  sink.put_bit(f.type == FrameType::kPredicted ? 1 : 0);
  if (p.pose_present()) {
    if (!f.pose) throw InputError("coded frame: pose payload required by the stream mode");
    for (uint32_t c : f.pose->coords) sink.put_bits(c, kPoseCoordBits);
  }

  if (f.type == FrameType::kIntra) {
    write_plane_blocks(sink, f.intra_luma, size_t(p.luma_block_count()));
    if (p.format == ChromaFormat::kC420) {
      write_plane_blocks(sink, f.intra_cb, size_t(p.chroma_block_count()));
      write_plane_blocks(sink, f.intra_cr, size_t(p.chroma_block_count()));
    }
  } else {
    if (f.mbs.size() != size_t(p.mb_count()))
      throw InputError("coded frame: wrong macroblock count");
    for (const MacroblockDecision& mb : f.mbs) {
      sink.put_bit(mb.split ? 1 : 0);
      const size_t part_count = mb.split ? 4 : 1;
      const size_t blocks_per_part = mb.split ? 1 : 4;
      if (mb.parts.size() != part_count) throw InputError("coded frame: wrong partition count");
      for (const PartitionDecision& part : mb.parts) {
        if (p.forward_present()) {
          sink.put_bit(part.ref_index);
        } else if (part.ref_index != 0) {
          throw InputError("coded frame: forward reference signaled in a backward-only stream");
        }
        sink.put_se(part.mv.dx);
        sink.put_se(part.mv.dy);
        if (part.luma.size() != blocks_per_part)
          throw InputError("coded frame: wrong transform block count in partition");
        for (const CoeffBlock& b : part.luma) {
          sink.put_bit(b.coded ? 1 : 0);
          if (b.coded) code_coeff_block(sink, b.levels);
        }
      }
      if (p.format == ChromaFormat::kC420) {
        if (mb.chroma.size() != 2) throw InputError("coded frame: missing chroma blocks");
        for (const CoeffBlock& b : mb.chroma) {
          sink.put_bit(b.coded ? 1 : 0);
          if (b.coded) code_coeff_block(sink, b.levels);
        }
      } else if (!mb.chroma.empty()) {
        throw InputError("coded frame: chroma blocks in a mono stream");
      }
    }
  }
  sink.align();
}

CodedFrame read_frame(BitSource& src, const StreamParams& p, int frame_index) {
  try {
    CodedFrame f;
    f.type = src.get_bit() ? FrameType::kPredicted : FrameType::kIntra;
    if (p.pose_present()) {
      QuantizedPose pose;
      for (uint32_t& c : pose.coords) c = uint32_t(src.get_bits(kPoseCoordBits));
      f.pose = pose;
    }

    if (f.type == FrameType::kIntra) {
      f.intra_luma = read_plane_blocks(src, size_t(p.luma_block_count()));
      if (p.format == ChromaFormat::kC420) {
        f.intra_cb = read_plane_blocks(src, size_t(p.chroma_block_count()));
        f.intra_cr = read_plane_blocks(src, size_t(p.chroma_block_count()));
      }
    } else {
      f.mbs.resize(size_t(p.mb_count()));
      for (MacroblockDecision& mb : f.mbs) {
        mb.split = src.get_bit() != 0;
        const size_t part_count = mb.split ? 4 : 1;
        const size_t blocks_per_part = mb.split ? 1 : 4;
        mb.parts.resize(part_count);
        for (PartitionDecision& part : mb.parts) {
          part.ref_index = p.forward_present() ? src.get_bit() : 0;
          part.mv = read_mv(src);
          part.luma.resize(blocks_per_part);
          for (CoeffBlock& b : part.luma) {
            b.coded = src.get_bit() != 0;
            if (b.coded) b.levels = decode_coeff_block(src);
          }
        }
        if (p.format == ChromaFormat::kC420) {
          mb.chroma.resize(2);
          for (CoeffBlock& b : mb.chroma) {
            b.coded = src.get_bit() != 0;
            if (b.coded) b.levels = decode_coeff_block(src);
          }
        }
      }
    }
    src.align();
    return f;
  } catch (const CorruptionError& e) {
    throw CorruptionError("frame " + std::to_string(frame_index) + ": " + e.what());
  }
}

}  // namespace drfc
