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

#include <iosfwd>
#include <vector>

#include "drfc/codec.hpp"
#include "drfc/metrics.hpp"

namespace drfc {

struct SweepSpec {
  std::vector<int> qps = {24, 28, 34, 38};  // >= 4 distinct values
  int gop_size = 32;
  int search_range = 16;
  ModeDecision mode_decision = ModeDecision::kSad;
  int bump_radius = 4;
  int patch_radius = 24;
  std::vector<ForwardRefMode> modes = {ForwardRefMode::kOff, ForwardRefMode::kPatchWarp};

  void validate() const;
};

// One encode + decode at a fixed (mode, qp), with the measurements the
// RD harness needs.
struct CodecRun {
  ForwardRefMode mode = ForwardRefMode::kOff;
  int qp = 0;
  RdPoint point;          // bits == stream bytes * 8
  SequenceRun per_frame;  // PSNR vs source and serialized bits per frame
  EncodeStats stats;
  std::vector<uint8_t> stream;
};

CodecRun run_codec_cell(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                        const EncoderConfig& cfg, const ExternalFrameStore* external = nullptr);

struct SweepResult {
  int frame_count = 0;
  std::vector<CodecRun> cells;  // mode-major, QPs in listed order
  struct BdLine {
    ForwardRefMode mode;
    double bd_psnr_db = 0.0;
    double bd_rate_pct = 0.0;
  };
  std::vector<BdLine> bd;  // each non-anchor mode entry vs the first `off`

  RdCurve curve(ForwardRefMode mode) const;         // points of one mode
  const CodecRun& cell(ForwardRefMode mode, int qp) const;
};

// Runs every (mode, qp) cell and computes BD deltas against the `off`
// anchor when one is listed. Failures are rethrown with (mode, qp) context.
SweepResult run_sweep(const std::vector<Frame>& frames, const std::vector<Pose>& poses,
                      const SweepSpec& spec, const ExternalFrameStore* external = nullptr);

// CSV: header line, one "mode,qp,frames,total_bits,bpp,psnr" row per cell,
// then one "# bd <mode> vs off: ..." comment line per BD entry.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

}  // namespace drfc
