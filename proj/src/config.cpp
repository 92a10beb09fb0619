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

#include "drfc/config.hpp"

namespace drfc {

void EncoderConfig::validate() const {
  if (qp < 0 || qp > 51) throw RangeError("qp must be in [0, 51], got " + std::to_string(qp));
  if (gop_size < 1) throw RangeError("gop_size must be >= 1, got " + std::to_string(gop_size));
  if (search_range < 1 || search_range > 64)
    throw RangeError("search_range must be in [1, 64], got " + std::to_string(search_range));
  if (patch_radius < 1)
    throw RangeError("patch_radius must be >= 1, got " + std::to_string(patch_radius));
  if (bump_radius < 1)
    throw RangeError("bump_radius must be >= 1, got " + std::to_string(bump_radius));
}

std::string to_string(ForwardRefMode m) {
  switch (m) {
    case ForwardRefMode::kOff: return "off";
    case ForwardRefMode::kLinear: return "linear";
    case ForwardRefMode::kPatchWarp: return "patchwarp";
    case ForwardRefMode::kExternal: return "external";
  }
  return "unknown";
}

ForwardRefMode parse_forward_mode(const std::string& name) {
  if (name == "off") return ForwardRefMode::kOff;
  if (name == "linear") return ForwardRefMode::kLinear;
  if (name == "patchwarp") return ForwardRefMode::kPatchWarp;
  if (name == "external") return ForwardRefMode::kExternal;
  throw InputError("unknown forward-referencing mode: " + name);
}

}  // namespace drfc
