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

#include "drfc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace drfc {

void SweepSpec::validate() const {
  if (qps.size() < 4) throw InputError("sweep needs at least 4 QPs for BD metrics");
  for (size_t i = 0; i < qps.size(); ++i) {
    if (qps[i] < 0 || qps[i] > 51)
      throw RangeError("sweep qp out of range: " + std::to_string(qps[i]));
    for (size_t j = i + 1; j < qps.size(); ++j)
      if (qps[i] == qps[j]) throw InputError("sweep QPs must be distinct");
  }
  if (modes.empty()) throw InputError("sweep needs at least one mode");
}

CodecRun run_codec_cell(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                        const EncoderConfig& cfg, const ExternalFrameStore* external) {
  EncodedSequence enc = encode_sequence(frames, poses, cfg, external);
  DecoderOptions opts;
  opts.bump_radius = cfg.bump_radius;
  opts.patch_radius = cfg.patch_radius;
  opts.external = external;
  DecodedSequence dec = decode_sequence(enc.stream, opts);

  CodecRun run;
  run.mode = cfg.forward_ref_mode;
  run.qp = cfg.qp;
  double psnr_sum = 0.0;
  for (size_t i = 0; i < frames.size(); ++i) {
    const double p = psnr(frames[i], dec.frames[i]);
    run.per_frame.psnr_db.push_back(p);
    run.per_frame.bits.push_back(enc.stats.frames[i].bits);
    psnr_sum += p;
  }
  run.point.qp = cfg.qp;
  run.point.bits = uint64_t(enc.stream.size()) * 8;  // whole container, trailer included
  run.point.bpp = double(run.point.bits) /
                  (double(frames[0].width) * double(frames[0].height) * double(frames.size()));
  run.point.psnr_db = psnr_sum / double(frames.size());
  run.stats = std::move(enc.stats);
  run.stream = std::move(enc.stream);
  return run;
}

RdCurve SweepResult::curve(ForwardRefMode mode) const {
  std::vector<RdPoint> pts;
  for (const CodecRun& run : cells)
    if (run.mode == mode) pts.push_back(run.point);
  return RdCurve::make(std::move(pts));
}

const CodecRun& SweepResult::cell(ForwardRefMode mode, int qp) const {
  for (const CodecRun& run : cells)
    if (run.mode == mode && run.qp == qp) return run;
  throw InputError("sweep has no cell for mode " + to_string(mode) + " qp " + std::to_string(qp));
}

SweepResult run_sweep(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                      const SweepSpec& spec, const ExternalFrameStore* external) {
  spec.validate();
  if (frames.empty()) throw InputError("sweep needs at least one frame");

  SweepResult result;
  result.frame_count = int(frames.size());
  for (ForwardRefMode mode : spec.modes) {
    for (int qp : spec.qps) {
      EncoderConfig cfg;
      cfg.qp = qp;
      cfg.gop_size = spec.gop_size;
      cfg.search_range = spec.search_range;
      cfg.mode_decision = spec.mode_decision;
      cfg.bump_radius = spec.bump_radius;
      cfg.patch_radius = spec.patch_radius;
      cfg.forward_ref_mode = mode;
      try {
        result.cells.push_back(run_codec_cell(frames, poses, cfg, external));
      } catch (const Error& e) {
        throw Error("sweep mode=" + to_string(mode) + " qp=" + std::to_string(qp) + ": " +
                    e.what());
      }
    }
  }

  // BD summary against the first `off` entry, one line per other mode entry.
  size_t anchor = spec.modes.size();
  for (size_t i = 0; i < spec.modes.size(); ++i) {
    if (spec.modes[i] == ForwardRefMode::kOff) {
      anchor = i;
      break;
    }
  }
  if (anchor < spec.modes.size()) {
    const RdCurve anchor_curve = result.curve(ForwardRefMode::kOff);
    for (size_t i = 0; i < spec.modes.size(); ++i) {
      if (i == anchor) continue;
      std::vector<RdPoint> pts;
      for (size_t q = 0; q < spec.qps.size(); ++q)
        pts.push_back(result.cells[i * spec.qps.size() + q].point);
      const RdCurve test = RdCurve::make(std::move(pts));
      result.bd.push_back(
          {spec.modes[i], bd_psnr(anchor_curve, test), bd_rate(anchor_curve, test)});
    }
  }
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "mode,qp,frames,total_bits,bpp,psnr\n";
  for (const CodecRun& run : result.cells) {
    std::ostringstream bpp;
    bpp.precision(9);
    bpp << run.point.bpp;
    std::ostringstream psnr_s;
    psnr_s.setf(std::ios::fixed);
    psnr_s.precision(4);
    if (std::isinf(run.point.psnr_db))
      psnr_s << "inf";
    else
      psnr_s << run.point.psnr_db;
    os << to_string(run.mode) << ',' << run.qp << ',' << result.frame_count << ','
       << run.point.bits << ',' << bpp.str() << ',' << psnr_s.str() << '\n';
  }
  for (const SweepResult::BdLine& line : result.bd) {
    os << "# bd " << to_string(line.mode) << " vs off: bd_psnr_db=";
    std::ostringstream v;
    v.setf(std::ios::fixed);
    v.precision(4);
    v << line.bd_psnr_db << " bd_rate_pct=" << line.bd_rate_pct;
    os << v.str() << '\n';
  }
}

}  // namespace drfc
