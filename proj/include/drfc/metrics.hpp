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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "drfc/frame.hpp"

namespace drfc {

// Luma-only PSNR in dB: 10 * log10(255^2 / MSE). Identical frames yield
// +infinity, which is reported as such and never folded into a number.
double psnr(const Frame& a, const Frame& b);

struct RdPoint {
  int qp = 0;
  uint64_t bits = 0;   // total stream bits, headers and padding included
  double bpp = 0.0;    // bits / (width * height * frames)
  double psnr_db = 0.0;
};

// At least 4 points, strictly increasing bpp, distinct QPs; kept sorted
// ascending by bpp.
struct RdCurve {
  std::vector<RdPoint> points;
  static RdCurve make(std::vector<RdPoint> pts);
};

// Least-squares cubic y(x) in a mean-centered basis (conditioning), plus the
// exact-antiderivative integral. Exposed so tests can integrate the same fit
// with an independent method.
struct CubicFit {
  std::array<double, 4> c{};  // y = sum c_i * (x - center)^i
  double center = 0.0;
};
CubicFit fit_cubic(std::span<const double> x, std::span<const double> y);
double eval_cubic(const CubicFit& f, double x);
double integrate_cubic(const CubicFit& f, double lo, double hi);

// Classic Bjontegaard deltas over two RD curves: cubic fits of PSNR against
// log10(bpp) (bd_psnr, in dB) or log10(bpp) against PSNR (bd_rate, in
// percent, (10^delta - 1) * 100). Curves must overlap, hold finite PSNR,
// and be monotone increasing in PSNR with rate.
double bd_psnr(const RdCurve& anchor, const RdCurve& test);
double bd_rate(const RdCurve& anchor, const RdCurve& test);

struct FrameGainRow {
  int t = 0;  // 1-based frame index
  double psnr_a = 0.0;
  double psnr_b = 0.0;
  double delta_psnr = 0.0;  // b - a
  uint64_t bits_a = 0;
  uint64_t bits_b = 0;
};

struct FrameGainTable {
  std::vector<FrameGainRow> rows;
  double avg_delta_psnr = 0.0;
  double avg_delta_bits = 0.0;  // b - a, averaged over frames
};

// Per-frame quality and rate of one decoded run.
struct SequenceRun {
  std::vector<double> psnr_db;
  std::vector<uint64_t> bits;
};

// Per-frame deltas of run b against run a; rejects mismatched lengths.
FrameGainTable per_frame_gain(const SequenceRun& a, const SequenceRun& b);

// CSV emitters: "qp,frames,total_bits,bpp,psnr" and
// "t,psnr_a,psnr_b,delta_psnr,bits_a,bits_b".
void write_rd_csv(std::ostream& os, const RdCurve& curve, int frames);
void write_frame_gain_csv(std::ostream& os, const FrameGainTable& table);

}  // namespace drfc
