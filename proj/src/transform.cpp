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

#include "drfc/transform.hpp"

#include <cmath>

namespace drfc {

namespace {

// Orthonormal DCT-II basis: c[u][x] = a(u) cos((2x+1) u pi / 16),
// a(0) = sqrt(1/8), a(u>0) = 1/2.
struct DctBasis {
  double c[8][8];
  DctBasis() {
    const double pi = std::acos(-1.0);
    for (int u = 0; u < 8; ++u) {
      const double a = u == 0 ? std::sqrt(1.0 / 8.0) : 0.5;
      for (int x = 0; x < 8; ++x) c[u][x] = a * std::cos((2 * x + 1) * u * pi / 16.0);
    }
  }
};

const DctBasis& basis() {
  static const DctBasis b;
  return b;
}

}  // namespace

int iround(double v) { return v >= 0.0 ? int(v + 0.5) : -int(-v + 0.5); }

int halve_round(int v) { return v >= 0 ? (v + 1) / 2 : -((-v + 1) / 2); }

CoeffArray dct8x8(const SampleArray& block) {
  const auto& B = basis();
  double tmp[8][8];
  for (int y = 0; y < 8; ++y)
    for (int u = 0; u < 8; ++u) {
      double s = 0.0;
      for (int x = 0; x < 8; ++x) s += block[y * 8 + x] * B.c[u][x];
      tmp[y][u] = s;
    }
  CoeffArray out;
  for (int v = 0; v < 8; ++v)
    for (int u = 0; u < 8; ++u) {
      double s = 0.0;
      for (int y = 0; y < 8; ++y) s += tmp[y][u] * B.c[v][y];
      out[v * 8 + u] = s;
    }
  return out;
}

CoeffArray idct8x8(const CoeffArray& coeffs) {
  const auto& B = basis();
  double tmp[8][8];
  for (int u = 0; u < 8; ++u)
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int v = 0; v < 8; ++v) s += coeffs[v * 8 + u] * B.c[v][y];
      tmp[y][u] = s;
    }
  CoeffArray out;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) {
      double s = 0.0;
      for (int u = 0; u < 8; ++u) s += tmp[y][u] * B.c[u][x];
      out[y * 8 + x] = s;
    }
  return out;
}

double qstep(int qp) { return std::exp2((qp - 4) / 6.0); }

LevelArray quantize_block(const CoeffArray& coeffs, int qp) {
  const double step = qstep(qp);
  LevelArray out;
  for (int i = 0; i < 64; ++i) out[i] = iround(coeffs[i] / step);
  return out;
}

CoeffArray dequantize_block(const LevelArray& levels, int qp) {
  const double step = qstep(qp);
  CoeffArray out;
  for (int i = 0; i < 64; ++i) out[i] = levels[i] * step;
  return out;
}

SampleArray reconstruct_block(const LevelArray& levels, int qp) {
  const CoeffArray spatial = idct8x8(dequantize_block(levels, qp));
  SampleArray out;
  for (int i = 0; i < 64; ++i) out[i] = iround(spatial[i]);
  return out;
}

}  // namespace drfc
