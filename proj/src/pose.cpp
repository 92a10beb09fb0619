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

#include "drfc/pose.hpp"

#include <cmath>
#include <string>

namespace drfc {

QuantizedPose quantize_pose(const Pose& pose) {
  QuantizedPose out;
  for (int j = 0; j < kJointCount; ++j) {
    for (int c = 0; c < 2; ++c) {
      const double v = c == 0 ? pose.joints[j].x : pose.joints[j].y;
      if (!std::isfinite(v) || v < 0.0 || v > kPoseCoordMax)
        throw RangeError("pose coordinate outside the 16.8 fixed-point range: " +
                         std::to_string(v));
      // Nonnegative, so round half up equals round half away from zero.
      out.coords[2 * j + c] = uint32_t(v * 256.0 + 0.5);
    }
  }
  return out;
}

Pose dequantize_pose(const QuantizedPose& qp) {
  Pose out;
  for (int j = 0; j < kJointCount; ++j) {
    const uint32_t qx = qp.coords[2 * j];
    const uint32_t qy = qp.coords[2 * j + 1];
    if (qx >= (1u << kPoseCoordBits) || qy >= (1u << kPoseCoordBits))
      throw RangeError("quantized pose coordinate exceeds 24 bits");
    out.joints[j].x = qx / 256.0;
    out.joints[j].y = qy / 256.0;
  }
  return out;
}

}  // namespace drfc
