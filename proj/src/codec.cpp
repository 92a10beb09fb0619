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

#include "drfc/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace drfc {

namespace {

inline uint8_t clamp_u8(int v) { return uint8_t(std::clamp(v, 0, 255)); }

// 8x8 transform cell offsets within a macroblock, raster order.
constexpr int kCellOffX[4] = {0, 8, 0, 8};
constexpr int kCellOffY[4] = {0, 0, 8, 8};

SampleArray extract_block(const Plane8& p, int x0, int y0) {
  SampleArray out;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) out[y * 8 + x] = p.at(x0 + x, y0 + y);
  return out;
}

// Residual (src - pred) over one 8x8 cell: transform, quantize, flag.
CoeffBlock code_residual_block(const Plane8& src, const Plane8& pred, int x0, int y0, int qp) {
  SampleArray residual;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      residual[y * 8 + x] = int(src.at(x0 + x, y0 + y)) - int(pred.at(x0 + x, y0 + y));
  CoeffBlock out;
  out.levels = quantize_block(dct8x8(residual), qp);
  out.coded = std::any_of(out.levels.begin(), out.levels.end(), [](int32_t v) { return v != 0; });
  return out;
}

// recon = clamp(pred + reconstructed residual) over one 8x8 cell.
void apply_residual(Plane8& recon, const Plane8& pred, int x0, int y0, const CoeffBlock& cb,
                    int qp) {
  if (!cb.coded) {
    for (int y = 0; y < 8; ++y)
      for (int x = 0; x < 8; ++x) recon.at(x0 + x, y0 + y) = pred.at(x0 + x, y0 + y);
    return;
  }
  const SampleArray r = reconstruct_block(cb.levels, qp);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      recon.at(x0 + x, y0 + y) = clamp_u8(int(pred.at(x0 + x, y0 + y)) + r[y * 8 + x]);
}

// Motion compensation of one partition region, edge-clamped reads.
void predict_region(Plane8& out, const Plane8& ref, const BlockRect& r, MotionVector mv) {
  for (int y = 0; y < r.h; ++y)
    for (int x = 0; x < r.w; ++x)
      out.at(r.x + x, r.y + y) = ref.at_clamped(r.x + x + mv.dx, r.y + y + mv.dy);
}

BlockRect partition_rect(int mb_x, int mb_y, bool split, int part_index) {
  if (!split) return {mb_x, mb_y, 16, 16};
  return {mb_x + kCellOffX[part_index], mb_y + kCellOffY[part_index], 8, 8};
}

const Frame& pick_ref(const ReferenceFrames& refs, int ref_index) {
  const Frame* f = ref_index == 0 ? refs.backward : refs.forward;
  if (!f) throw InputError("reference frame missing for ref_index " + std::to_string(ref_index));
  return *f;
}

// Writes the prediction for one macroblock (luma, then chroma with halved
// vectors). Shared between encoder and decoder so both see identical bytes.
void predict_macroblock(const MacroblockDecision& mb, const ReferenceFrames& refs, int mb_x,
                        int mb_y, Frame& pred) {
  for (size_t k = 0; k < mb.parts.size(); ++k) {
    const PartitionDecision& part = mb.parts[k];
    const Frame& ref = pick_ref(refs, part.ref_index);
    const BlockRect r = partition_rect(mb_x, mb_y, mb.split, int(k));
    predict_region(pred.luma, ref.luma, r, part.mv);
    if (pred.has_chroma()) {
      const BlockRect cr_rect{r.x / 2, r.y / 2, r.w / 2, r.h / 2};
      const MotionVector cmv{halve_round(part.mv.dx), halve_round(part.mv.dy)};
      predict_region(pred.cb, ref.cb, cr_rect, cmv);
      predict_region(pred.cr, ref.cr, cr_rect, cmv);
    }
  }
}

void check_padded(const Frame& f) {
  f.validate();
  if (f.width % kMacroblockSize != 0 || f.height % kMacroblockSize != 0)
    throw DimensionError("codec frames must be padded to multiples of 16");
}

void check_same_geometry(const Frame& a, const Frame& b, const char* what) {
  if (a.width != b.width || a.height != b.height || a.format != b.format)
    throw DimensionError(std::string(what) + ": geometry does not match the source frame");
}

}  // namespace

double lagrange_multiplier(int qp) { return 0.85 * std::exp2((qp - 12) / 3.0); }

RefChoice select_reference(const SearchResult& backward, const std::optional<SearchResult>& forward,
                           const EncoderConfig& cfg) {
  const bool forward_present = cfg.forward_ref_mode != ForwardRefMode::kOff;
  const double lambda =
      cfg.mode_decision == ModeDecision::kLagrangian ? lagrange_multiplier(cfg.qp) : 0.0;
  const auto cost = [&](const SearchResult& sr) {
    return double(sr.sad) + lambda * partition_signal_bits(forward_present, sr.mv);
  };
  RefChoice choice{0, backward, cost(backward)};
  if (forward) {
    const double fwd_cost = cost(*forward);
    if (fwd_cost < choice.cost) choice = {1, *forward, fwd_cost};  // tie keeps backward
  }
  return choice;
}

PartitionPlan decide_partitions(const MbCandidates& backward,
                                const std::optional<MbCandidates>& forward,
                                const EncoderConfig& cfg) {
  PartitionPlan plan;
  plan.whole = select_reference(backward.whole,
                                forward ? std::optional(forward->whole) : std::nullopt, cfg);
  double split_cost = 0.0;
  uint32_t split_sad = 0;
  for (int k = 0; k < 4; ++k) {
    plan.quads[k] = select_reference(
        backward.quad[k], forward ? std::optional(forward->quad[k]) : std::nullopt, cfg);
    split_cost += plan.quads[k].cost;
    split_sad += plan.quads[k].sr.sad;
  }
  plan.split = split_cost < plan.whole.cost;  // strict: equal cost stays unsplit
  plan.chosen_sad = plan.split ? split_sad : plan.whole.sr.sad;
  return plan;
}

std::pair<CodedFrame, Frame> encode_i_frame(const Frame& padded, const EncoderConfig& cfg) {
  cfg.validate();
  check_padded(padded);
  CodedFrame coded;
  coded.type = FrameType::kIntra;

  const auto code_plane = [&](const Plane8& plane) {
    std::vector<CoeffBlock> blocks;
    blocks.reserve(size_t(plane.width / 8) * size_t(plane.height / 8));
    const Plane8 zero(plane.width, plane.height, 0);
    for (int y = 0; y < plane.height; y += 8)
      for (int x = 0; x < plane.width; x += 8)
        blocks.push_back(code_residual_block(plane, zero, x, y, cfg.qp));
    return blocks;
  };
  coded.intra_luma = code_plane(padded.luma);
  if (padded.has_chroma()) {
    coded.intra_cb = code_plane(padded.cb);
    coded.intra_cr = code_plane(padded.cr);
  }
  Frame recon = decode_i_frame(coded, padded.width, padded.height, padded.format, cfg.qp);
  return {std::move(coded), std::move(recon)};
}

Frame decode_i_frame(const CodedFrame& f, int padded_width, int padded_height, ChromaFormat fmt,
                     int qp) {
  if (f.type != FrameType::kIntra) throw InputError("decode_i_frame: not an intra frame");
  Frame recon(padded_width, padded_height, fmt);
  const auto decode_plane = [&](Plane8& plane, const std::vector<CoeffBlock>& blocks) {
    const size_t expected = size_t(plane.width / 8) * size_t(plane.height / 8);
    if (blocks.size() != expected) throw InputError("decode_i_frame: wrong block count");
    const Plane8 zero(plane.width, plane.height, 0);
    size_t i = 0;
    for (int y = 0; y < plane.height; y += 8)
      for (int x = 0; x < plane.width; x += 8) apply_residual(plane, zero, x, y, blocks[i++], qp);
  };
  decode_plane(recon.luma, f.intra_luma);
  if (recon.has_chroma()) {
    decode_plane(recon.cb, f.intra_cb);
    decode_plane(recon.cr, f.intra_cr);
  }
  return recon;
}

std::pair<CodedFrame, Frame> encode_p_frame(const Frame& padded, const ReferenceFrames& refs,
                                            const EncoderConfig& cfg, FrameStats* stats,
                                            PredictionBuffers* buffers) {
  cfg.validate();
  check_padded(padded);
  if (!refs.backward) throw InputError("encode_p_frame: backward reference missing");
  check_same_geometry(*refs.backward, padded, "backward reference");
  const bool forward_present = cfg.forward_ref_mode != ForwardRefMode::kOff;
  if (forward_present) {
    if (!refs.forward) throw InputError("encode_p_frame: forward reference missing");
    check_same_geometry(*refs.forward, padded, "forward reference");
  }

  const int range = cfg.search_range;
  const PaddedPlane ref_b = pad_reference(refs.backward->luma, range);
  PaddedPlane ref_f;
  if (forward_present) ref_f = pad_reference(refs.forward->luma, range);

  CodedFrame coded;
  coded.type = FrameType::kPredicted;
  Frame pred(padded.width, padded.height, padded.format);
  if (stats) {
    stats->type = FrameType::kPredicted;
    stats->mb_sad.clear();
    stats->total_sad = 0;
    stats->partitions = 0;
    stats->forward_partitions = 0;
  }

  for (int mb_y = 0; mb_y < padded.height; mb_y += kMacroblockSize) {
    for (int mb_x = 0; mb_x < padded.width; mb_x += kMacroblockSize) {
      const MbCandidates cand_b = search_macroblock(padded.luma, mb_x, mb_y, ref_b, range);
      std::optional<MbCandidates> cand_f;
      if (forward_present) cand_f = search_macroblock(padded.luma, mb_x, mb_y, ref_f, range);

      const PartitionPlan plan = decide_partitions(cand_b, cand_f, cfg);
      MacroblockDecision mb;
      mb.split = plan.split;
      if (plan.split) {
        for (int k = 0; k < 4; ++k)
          mb.parts.push_back({plan.quads[k].ref_index, plan.quads[k].sr.mv, {}});
      } else {
        mb.parts.push_back({plan.whole.ref_index, plan.whole.sr.mv, {}});
      }

      predict_macroblock(mb, refs, mb_x, mb_y, pred);

      // Luma transform cells in raster order; owner partition by layout.
      for (int k = 0; k < 4; ++k) {
        CoeffBlock blk = code_residual_block(padded.luma, pred.luma, mb_x + kCellOffX[k],
                                             mb_y + kCellOffY[k], cfg.qp);
        mb.parts[mb.split ? size_t(k) : 0].luma.push_back(std::move(blk));
      }
      if (padded.has_chroma()) {
        mb.chroma.push_back(code_residual_block(padded.cb, pred.cb, mb_x / 2, mb_y / 2, cfg.qp));
        mb.chroma.push_back(code_residual_block(padded.cr, pred.cr, mb_x / 2, mb_y / 2, cfg.qp));
      }

      if (stats) {
        stats->mb_sad.push_back(plan.chosen_sad);
        stats->total_sad += plan.chosen_sad;
        for (const PartitionDecision& part : mb.parts) {
          ++stats->partitions;
          if (part.ref_index == 1) ++stats->forward_partitions;
        }
      }
      coded.mbs.push_back(std::move(mb));
    }
  }

  const StreamParams p =
      StreamParams::make(padded.width, padded.height, padded.format, cfg.forward_ref_mode);
  Frame recon = decode_p_frame(coded, refs, p, cfg.qp);

  if (buffers) {
    buffers->forward_ref = forward_present ? *refs.forward : Frame{};
    buffers->final_pred = pred;
    Frame bwd_pred(padded.width, padded.height, padded.format);
    int mb_index = 0;
    for (int mb_y = 0; mb_y < padded.height; mb_y += kMacroblockSize)
      for (int mb_x = 0; mb_x < padded.width; mb_x += kMacroblockSize) {
        MacroblockDecision mb = coded.mbs[mb_index++];
        for (PartitionDecision& part : mb.parts) part.ref_index = 0;
        predict_macroblock(mb, refs, mb_x, mb_y, bwd_pred);
      }
    buffers->backward_pred = std::move(bwd_pred);
    const size_t n = padded.luma.samples.size();
    buffers->residual.resize(n);
    buffers->recon_residual.resize(n);
    for (size_t i = 0; i < n; ++i) {
      buffers->residual[i] =
          int16_t(int(padded.luma.samples[i]) - int(pred.luma.samples[i]));
      buffers->recon_residual[i] =
          int16_t(int(recon.luma.samples[i]) - int(pred.luma.samples[i]));
    }
  }
  return {std::move(coded), std::move(recon)};
}

Frame decode_p_frame(const CodedFrame& f, const ReferenceFrames& refs, const StreamParams& p,
                     int qp) {
  if (f.type != FrameType::kPredicted) throw InputError("decode_p_frame: not a P-frame");
  if (f.mbs.size() != size_t(p.mb_count())) throw InputError("decode_p_frame: macroblock count");
  if (!refs.backward) throw InputError("decode_p_frame: backward reference missing");

  Frame pred(p.padded_width, p.padded_height, p.format);
  Frame recon(p.padded_width, p.padded_height, p.format);
  int mb_index = 0;
  for (int mb_y = 0; mb_y < p.padded_height; mb_y += kMacroblockSize) {
    for (int mb_x = 0; mb_x < p.padded_width; mb_x += kMacroblockSize) {
      const MacroblockDecision& mb = f.mbs[size_t(mb_index++)];
      predict_macroblock(mb, refs, mb_x, mb_y, pred);
      for (int k = 0; k < 4; ++k) {
        const CoeffBlock& blk = mb.split ? mb.parts[size_t(k)].luma.at(0)
                                         : mb.parts.at(0).luma.at(size_t(k));
        apply_residual(recon.luma, pred.luma, mb_x + kCellOffX[k], mb_y + kCellOffY[k], blk, qp);
      }
      if (p.format == ChromaFormat::kC420) {
        apply_residual(recon.cb, pred.cb, mb_x / 2, mb_y / 2, mb.chroma.at(0), qp);
        apply_residual(recon.cr, pred.cr, mb_x / 2, mb_y / 2, mb.chroma.at(1), qp);
      }
    }
  }
  return recon;
}

Frame make_forward_reference(ForwardRefMode mode, const Frame& decoded_i_padded,
                             const QuantizedPose& pose_i, const QuantizedPose& pose_t,
                             int bump_radius, int patch_radius, const ExternalFrameStore* store,
                             int frame_index, int width, int height, ChromaFormat fmt) {
  switch (mode) {
    case ForwardRefMode::kLinear:
      return synthesize_linear({&decoded_i_padded, pose_i, pose_t}, bump_radius);
    case ForwardRefMode::kPatchWarp:
      return synthesize_patchwarp({&decoded_i_padded, pose_i, pose_t}, patch_radius);
    case ForwardRefMode::kExternal:
      if (!store) throw InputError("external forward mode requires a frame store");
      return pad_to_macroblock(store->load(frame_index, width, height, fmt));
    case ForwardRefMode::kOff:
      break;
  }
  throw InputError("no forward reference in mode off");
}

EncodedSequence encode_sequence(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                                const EncoderConfig& cfg, const ExternalFrameStore* external) {
  cfg.validate();
  if (frames.empty()) throw InputError("encode_sequence: no frames");
  if (frames.size() > 0xFFFFFFFFull) throw InputError("encode_sequence: too many frames");
  if (cfg.gop_size > 255) throw RangeError("gop_size exceeds the container limit of 255");
  const Frame& first = frames.front();
  first.validate();
  if (first.width > 0xFFFF || first.height > 0xFFFF)
    throw DimensionError("frame dimensions exceed the container limit of 65535");
  for (const Frame& f : frames) {
    f.validate();
    check_same_geometry(f, first, "sequence frame");
  }
  const bool need_pose = mode_carries_pose(cfg.forward_ref_mode);
  if (need_pose && poses.size() != frames.size())
    throw InputError("pose count mismatch: " + std::to_string(poses.size()) + " poses for " +
                     std::to_string(frames.size()) + " frames");
  if (cfg.forward_ref_mode == ForwardRefMode::kExternal && !external)
    throw InputError("external forward mode requires a frame store");

  const StreamParams p =
      StreamParams::make(first.width, first.height, first.format, cfg.forward_ref_mode);
  BitSink sink;
  ContainerHeader header;
  header.width = uint16_t(first.width);
  header.height = uint16_t(first.height);
  header.format = first.format;
  header.gop_size = uint8_t(cfg.gop_size);
  header.qp = uint8_t(cfg.qp);
  header.forward_mode = cfg.forward_ref_mode;
  header.frame_count = uint32_t(frames.size());
  write_container_header(sink, header);

  EncodedSequence out;
  Crc32 crc;
  Frame gop_ref;  // decoded I-frame of the current GOP, padded
  QuantizedPose gop_pose{};

  for (size_t i = 0; i < frames.size(); ++i) {
    const int t = int(i) + 1;  // 1-based frame index
    const bool intra = (i % size_t(cfg.gop_size)) == 0;
    const Frame padded = pad_to_macroblock(frames[i]);
    std::optional<QuantizedPose> qpose;
    if (need_pose) qpose = quantize_pose(poses[i]);

    CodedFrame coded;
    Frame recon;
    FrameStats fs;
    if (intra) {
      std::tie(coded, recon) = encode_i_frame(padded, cfg);
      fs.type = FrameType::kIntra;
      gop_ref = recon;
      if (qpose) gop_pose = *qpose;
    } else {
      Frame forward;
      ReferenceFrames refs{&gop_ref, nullptr};
      if (cfg.forward_ref_mode != ForwardRefMode::kOff) {
        forward = make_forward_reference(cfg.forward_ref_mode, gop_ref, gop_pose,
                                         qpose ? *qpose : QuantizedPose{}, cfg.bump_radius,
                                         cfg.patch_radius, external, t, first.width, first.height,
                                         first.format);
        refs.forward = &forward;
      }
      std::tie(coded, recon) = encode_p_frame(padded, refs, cfg, &fs);
    }
    coded.pose = qpose;

    const size_t bits_before = sink.bit_size();
    write_frame(sink, coded, p);
    fs.bits = sink.bit_size() - bits_before;

    Frame cropped = crop_frame(recon, first.width, first.height);
    crc.update(cropped.luma.samples);
    out.reconstructions.push_back(std::move(cropped));
    out.stats.frames.push_back(std::move(fs));
  }

  sink.put_bits(crc.value(), 32);
  out.stream = sink.take();
  return out;
}

DecodedSequence decode_sequence(std::span<const uint8_t> stream, const DecoderOptions& opts) {
  BitSource src(stream);
  const ContainerHeader header = read_container_header(src);
  const StreamParams p =
      StreamParams::make(header.width, header.height, header.format, header.forward_mode);
  if (header.forward_mode == ForwardRefMode::kExternal && !opts.external)
    throw InputError("decoding an external-mode stream requires the forward frame store");

  DecodedSequence out;
  out.header = header;
  Crc32 crc;
  Frame gop_ref;
  QuantizedPose gop_pose{};
  bool have_ref = false;

  for (uint32_t t = 1; t <= header.frame_count; ++t) {
    const CodedFrame coded = read_frame(src, p, int(t));
    const bool expect_intra = ((t - 1) % header.gop_size) == 0;
    if ((coded.type == FrameType::kIntra) != expect_intra)
      throw CorruptionError("frame " + std::to_string(t) + ": frame type breaks the GOP pattern");

    Frame recon;
    if (coded.type == FrameType::kIntra) {
      recon = decode_i_frame(coded, p.padded_width, p.padded_height, header.format, header.qp);
      gop_ref = recon;
      if (coded.pose) gop_pose = *coded.pose;
      have_ref = true;
    } else {
      if (!have_ref)
        throw CorruptionError("frame " + std::to_string(t) + ": P-frame before any I-frame");
      Frame forward;
      ReferenceFrames refs{&gop_ref, nullptr};
      if (header.forward_mode != ForwardRefMode::kOff) {
        forward = make_forward_reference(header.forward_mode, gop_ref, gop_pose,
                                         coded.pose ? *coded.pose : QuantizedPose{},
                                         opts.bump_radius, opts.patch_radius, opts.external,
                                         int(t), header.width, header.height, header.format);
        refs.forward = &forward;
      }
      recon = decode_p_frame(coded, refs, p, header.qp);
    }

    Frame cropped = crop_frame(recon, header.width, header.height);
    crc.update(cropped.luma.samples);
    out.frames.push_back(std::move(cropped));
  }

  uint32_t stored;
  try {
    stored = uint32_t(src.get_bits(32));
  } catch (const CorruptionError&) {
    throw CorruptionError("stream truncated before the checksum trailer");
  }
  if (stored != crc.value()) throw CorruptionError("stream checksum mismatch");
  return out;
}

}  // namespace drfc
