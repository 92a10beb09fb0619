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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "drfc/pose.hpp"

namespace drfc {

// Frame-indexed pose annotations for one sequence.
// JSON schema: {"name": str, "width": int, "height": int,
//               "frames": [{"joints": [[x, y] * 13]}, ...]}
struct PoseDocument {
  std::string name;
  int width = 0;
  int height = 0;
  std::vector<Pose> frames;
};

// Validates joint counts, finiteness, and the 16.8 fixed-point coordinate
// range; errors cite the 1-based frame index. Rejects, never repairs.
PoseDocument read_pose_json(std::istream& in);
PoseDocument read_pose_json_file(const std::filesystem::path& path);

void write_pose_json(std::ostream& out, const PoseDocument& doc);
void write_pose_json_file(const std::filesystem::path& path, const PoseDocument& doc);

}  // namespace drfc
