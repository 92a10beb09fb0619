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

#include "drfc/frame.hpp"

namespace drfc {

struct Y4mMeta {
  int width = 0;
  int height = 0;
  ChromaFormat format = ChromaFormat::kC420;
  // Verbatim parameter text after the "YUV4MPEG2" signature (leading space
  // included); reused on write so read -> write is byte identity.
  std::string header_params;
};

struct Y4mVideo {
  Y4mMeta meta;
  std::vector<Frame> frames;
};

// Supports Cmono and the C420 family; anything else is rejected as an
// unsupported colorspace. Truncated payloads name the 1-based frame index.
Y4mVideo read_y4m(std::istream& in);

// Writes frames with bare "FRAME" markers. With meta null a canonical
// header is synthesized from the first frame.
void write_y4m(std::ostream& out, const std::vector<Frame>& frames, const Y4mMeta* meta = nullptr);

Y4mVideo read_y4m_file(const std::filesystem::path& path);
void write_y4m_file(const std::filesystem::path& path, const std::vector<Frame>& frames,
                    const Y4mMeta* meta = nullptr);

}  // namespace drfc
