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

namespace drfc {

inline constexpr int kTransformSize = 8;

using SampleArray = std::array<int32_t, 64>;  // 8x8 spatial block, row-major
using CoeffArray = std::array<double, 64>;    // 8x8 transform coefficients
using LevelArray = std::array<int32_t, 64>;   // quantized coefficient levels

// Orthonormal 2-D DCT-II over an 8x8 block; idct8x8 is its exact inverse
// (round trip below 1e-9 per coefficient).
CoeffArray dct8x8(const SampleArray& block);
CoeffArray idct8x8(const CoeffArray& coeffs);

// Quantizer step 2^((qp - 4) / 6): Qstep(4) == 1, +6 QP doubles the step.
double qstep(int qp);

// level = round(coeff / Qstep) half away from zero; dequantized = level * Qstep.
LevelArray quantize_block(const CoeffArray& coeffs, int qp);
CoeffArray dequantize_block(const LevelArray& levels, int qp);

// dequantize + inverse transform + round half away from zero. No clamping:
// callers clamp after adding the prediction.
SampleArray reconstruct_block(const LevelArray& levels, int qp);

// The shared rounding convention: half away from zero.
int iround(double v);
// Rounds v/2 half away from zero in integer arithmetic (chroma vectors).
int halve_round(int v);

}  // namespace drfc
