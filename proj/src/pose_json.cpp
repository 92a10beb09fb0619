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

#include "drfc/pose_json.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace drfc {

using nlohmann::json;

PoseDocument read_pose_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("pose JSON parse error: ") + e.what());
  }

  PoseDocument out;
  try {
    out.name = doc.at("name").get<std::string>();
    out.width = doc.at("width").get<int>();
    out.height = doc.at("height").get<int>();
    if (out.width <= 0 || out.height <= 0)
      throw FormatError("pose document dimensions must be positive");

    const json& frames = doc.at("frames");
    if (!frames.is_array()) throw FormatError("pose document: \"frames\" must be an array");
    int t = 0;
    for (const json& frame : frames) {
      ++t;
      const json& joints = frame.at("joints");
      if (!joints.is_array() || joints.size() != size_t(kJointCount))
        throw FormatError("pose frame " + std::to_string(t) + ": expected " +
                          std::to_string(kJointCount) + " joints, got " +
                          std::to_string(joints.is_array() ? joints.size() : 0));
      Pose pose;
      for (int j = 0; j < kJointCount; ++j) {
        const json& pt = joints[size_t(j)];
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number())
          throw FormatError("pose frame " + std::to_string(t) + " joint " + std::to_string(j) +
                            ": expected [x, y] numbers");
        const double x = pt[0].get<double>();
        const double y = pt[1].get<double>();
        if (!std::isfinite(x) || !std::isfinite(y))
          throw FormatError("pose frame " + std::to_string(t) + " joint " + std::to_string(j) +
                            ": non-finite coordinate");
        if (x < 0.0 || x > kPoseCoordMax || y < 0.0 || y > kPoseCoordMax)
          throw RangeError("pose frame " + std::to_string(t) + " joint " + std::to_string(j) +
                           ": coordinate outside the 16.8 fixed-point range");
        pose.joints[j] = {x, y};
      }
      out.frames.push_back(pose);
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("pose document schema violation: ") + e.what());
  }
  return out;
}

PoseDocument read_pose_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_pose_json(in);
}

void write_pose_json(std::ostream& out, const PoseDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["width"] = doc.width;
  j["height"] = doc.height;
  json frames = json::array();
  for (const Pose& pose : doc.frames) {
    json joints = json::array();
    for (const JointXY& pt : pose.joints) joints.push_back({pt.x, pt.y});
    frames.push_back({{"joints", joints}});
  }
  j["frames"] = std::move(frames);
  out << j.dump(2) << '\n';
}

void write_pose_json_file(const std::filesystem::path& path, const PoseDocument& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot create " + path.string());
  write_pose_json(out, doc);
}

}  // namespace drfc
