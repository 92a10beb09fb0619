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

#include "drfc/frame.hpp"

namespace drfc {

// Binary PGM ("P5"), maxval 255 only. ASCII "P2" and other maxvals are
// rejected, not repaired.
Frame read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const Frame& f);  // mono frames only

Frame read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const Frame& f);

}  // namespace drfc
