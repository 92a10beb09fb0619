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

#include "drfc/errors.hpp"

namespace drfc {

inline constexpr int kJointCount = 13;
inline constexpr int kPoseCoordCount = 2 * kJointCount;  // 26
inline constexpr int kPoseCoordBits = 24;                // unsigned 16.8 fixed point
inline constexpr int kPosePayloadBits = kPoseCoordCount * kPoseCoordBits;  // 624
inline constexpr double kPoseCoordMax = 65535.99609375;  // (2^24 - 1) / 256

// Fixed joint order shared by every pose producer and consumer.
enum class JointId : int {
  kHead = 0,
  kLeftShoulder,
  kRightShoulder,
  kLeftElbow,
  kRightElbow,
  kLeftWrist,
  kRightWrist,
  kLeftHip,
  kRightHip,
  kLeftKnee,
  kRightKnee,
  kLeftAnkle,
  kRightAnkle,
};

struct JointXY {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const JointXY&) const = default;
};

// 13 named 2-D joints in pixel units.
struct Pose {
  std::array<JointXY, kJointCount> joints{};

  JointXY& operator[](JointId id) { return joints[size_t(id)]; }
  const JointXY& operator[](JointId id) const { return joints[size_t(id)]; }
  bool operator==(const Pose&) const = default;
};

// 26 coordinates in unsigned 16.8 fixed point, x before y per joint.
// Serialized size is exactly 26 x 24 = 624 bits.
struct QuantizedPose {
  std::array<uint32_t, kPoseCoordCount> coords{};
  bool operator==(const QuantizedPose&) const = default;
};

// Stores round(v * 256) half away from zero in 24 bits per coordinate.
// Throws RangeError for non-finite or out-of-range coordinates.
QuantizedPose quantize_pose(const Pose& pose);

// Divides each stored value by 256. Round trip error is at most 1/512.
Pose dequantize_pose(const QuantizedPose& qp);

}  // namespace drfc
