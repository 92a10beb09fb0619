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

#include "drfc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace drfc {

double psnr(const Frame& a, const Frame& b) {
  if (a.width != b.width || a.height != b.height)
    throw DimensionError("psnr requires equal frame dimensions");
  uint64_t sum_sq = 0;
  const size_t n = a.luma.samples.size();
  for (size_t i = 0; i < n; ++i) {
    const int d = int(a.luma.samples[i]) - int(b.luma.samples[i]);
    sum_sq += uint64_t(d * d);
  }
  if (sum_sq == 0) return std::numeric_limits<double>::infinity();
  const double mse = double(sum_sq) / double(n);
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

RdCurve RdCurve::make(std::vector<RdPoint> pts) {
  if (pts.size() < 4) throw InputError("RD curve needs at least 4 points");
  std::sort(pts.begin(), pts.end(),
            [](const RdPoint& a, const RdPoint& b) { return a.bpp < b.bpp; });
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].bpp <= 0.0) throw InputError("RD curve bpp must be positive");
    if (i > 0 && pts[i].bpp <= pts[i - 1].bpp)
      throw InputError("RD curve bpp values must be strictly increasing");
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].qp == pts[j].qp) throw InputError("RD curve QPs must be distinct");
  }
  RdCurve c;
  c.points = std::move(pts);
  return c;
}

CubicFit fit_cubic(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 4)
    throw InputError("cubic fit needs at least 4 (x, y) samples");
  CubicFit fit;
  fit.center = std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());

  // Normal equations for the centered Vandermonde system.
  double xtx[4][4] = {};
  double xty[4] = {};
  for (size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] - fit.center;
    double pow_t[7] = {1.0};
    for (int k = 1; k < 7; ++k) pow_t[k] = pow_t[k - 1] * t;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) xtx[r][c] += pow_t[r + c];
      xty[r] += pow_t[r] * y[i];
    }
  }

  // Gaussian elimination with partial pivoting.
  int perm[4] = {0, 1, 2, 3};
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(xtx[perm[r]][col]) > std::abs(xtx[perm[pivot]][col])) pivot = r;
    std::swap(perm[col], perm[pivot]);
    const double diag = xtx[perm[col]][col];
    if (diag == 0.0) throw InputError("cubic fit is singular (degenerate x values)");
    for (int r = col + 1; r < 4; ++r) {
      const double factor = xtx[perm[r]][col] / diag;
      for (int c = col; c < 4; ++c) xtx[perm[r]][c] -= factor * xtx[perm[col]][c];
      xty[perm[r]] -= factor * xty[perm[col]];
    }
  }
  for (int r = 3; r >= 0; --r) {
    double s = xty[perm[r]];
    for (int c = r + 1; c < 4; ++c) s -= xtx[perm[r]][c] * fit.c[c];
    fit.c[r] = s / xtx[perm[r]][r];
  }
  return fit;
}

double eval_cubic(const CubicFit& f, double x) {
  const double t = x - f.center;
  return ((f.c[3] * t + f.c[2]) * t + f.c[1]) * t + f.c[0];
}

double integrate_cubic(const CubicFit& f, double lo, double hi) {
  const auto antiderivative = [&](double x) {
    const double t = x - f.center;
    return (((f.c[3] / 4.0 * t + f.c[2] / 3.0) * t + f.c[1] / 2.0) * t + f.c[0]) * t;
  };
  return antiderivative(hi) - antiderivative(lo);
}

namespace {

struct CurveSamples {
  std::vector<double> log_bpp;
  std::vector<double> psnr;
};

CurveSamples curve_samples(const RdCurve& curve) {
  CurveSamples s;
  for (const RdPoint& p : curve.points) {
    if (!std::isfinite(p.psnr_db))
      throw InputError("BD metrics reject curves with infinite PSNR points");
    s.log_bpp.push_back(std::log10(p.bpp));
    s.psnr.push_back(p.psnr_db);
  }
  for (size_t i = 1; i < s.psnr.size(); ++i)
    if (s.psnr[i] <= s.psnr[i - 1])
      throw InputError("BD metrics require PSNR monotone increasing with rate");
  return s;
}

// Mean difference (test - anchor) of the two fits over the x-overlap.
double mean_fit_delta(std::span<const double> xa, std::span<const double> ya,
                      std::span<const double> xt, std::span<const double> yt) {
  const double lo = std::max(*std::min_element(xa.begin(), xa.end()),
                             *std::min_element(xt.begin(), xt.end()));
  const double hi = std::min(*std::max_element(xa.begin(), xa.end()),
                             *std::max_element(xt.begin(), xt.end()));
  if (!(hi > lo)) throw InputError("BD metrics: curves do not overlap");
  const CubicFit fa = fit_cubic(xa, ya);
  const CubicFit ft = fit_cubic(xt, yt);
  return (integrate_cubic(ft, lo, hi) - integrate_cubic(fa, lo, hi)) / (hi - lo);
}

}  // namespace

double bd_psnr(const RdCurve& anchor, const RdCurve& test) {
  const CurveSamples a = curve_samples(anchor);
  const CurveSamples t = curve_samples(test);
  return mean_fit_delta(a.log_bpp, a.psnr, t.log_bpp, t.psnr);
}

double bd_rate(const RdCurve& anchor, const RdCurve& test) {
  const CurveSamples a = curve_samples(anchor);
  const CurveSamples t = curve_samples(test);
  const double delta_log_rate = mean_fit_delta(a.psnr, a.log_bpp, t.psnr, t.log_bpp);
  return (std::pow(10.0, delta_log_rate) - 1.0) * 100.0;
}

FrameGainTable per_frame_gain(const SequenceRun& a, const SequenceRun& b) {
  if (a.psnr_db.size() != a.bits.size() || b.psnr_db.size() != b.bits.size())
    throw InputError("per_frame_gain: psnr/bits length mismatch within a run");
  if (a.psnr_db.size() != b.psnr_db.size())
    throw InputError("per_frame_gain: sequences have different frame counts");
  FrameGainTable table;
  double sum_dpsnr = 0.0;
  double sum_dbits = 0.0;
  for (size_t i = 0; i < a.psnr_db.size(); ++i) {
    FrameGainRow row;
    row.t = int(i) + 1;
    row.psnr_a = a.psnr_db[i];
    row.psnr_b = b.psnr_db[i];
    row.delta_psnr = b.psnr_db[i] - a.psnr_db[i];
    row.bits_a = a.bits[i];
    row.bits_b = b.bits[i];
    sum_dpsnr += row.delta_psnr;
    sum_dbits += double(b.bits[i]) - double(a.bits[i]);
    table.rows.push_back(row);
  }
  if (!table.rows.empty()) {
    table.avg_delta_psnr = sum_dpsnr / double(table.rows.size());
    table.avg_delta_bits = sum_dbits / double(table.rows.size());
  }
  return table;
}

namespace {

std::string format_psnr(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << v;
  return os.str();
}

std::string format_bpp(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

void write_rd_csv(std::ostream& os, const RdCurve& curve, int frames) {
  os << "qp,frames,total_bits,bpp,psnr\n";
  for (const RdPoint& p : curve.points)
    os << p.qp << ',' << frames << ',' << p.bits << ',' << format_bpp(p.bpp) << ','
       << format_psnr(p.psnr_db) << '\n';
}

void write_frame_gain_csv(std::ostream& os, const FrameGainTable& table) {
  os << "t,psnr_a,psnr_b,delta_psnr,bits_a,bits_b\n";
  for (const FrameGainRow& r : table.rows)
    os << r.t << ',' << format_psnr(r.psnr_a) << ',' << format_psnr(r.psnr_b) << ','
       << format_psnr(r.delta_psnr) << ',' << r.bits_a << ',' << r.bits_b << '\n';
  os << "# avg_delta_psnr=" << format_psnr(table.avg_delta_psnr)
     << " avg_delta_bits=" << table.avg_delta_bits << '\n';
}

}  // namespace drfc
