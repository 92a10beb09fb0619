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

#include "drfc/y4m.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace drfc {

namespace {

constexpr const char* kSignature = "YUV4MPEG2";

bool read_plane(std::istream& in, Plane8& plane) {
  in.read(reinterpret_cast<char*>(plane.samples.data()),
          std::streamsize(plane.samples.size()));
  return size_t(in.gcount()) == plane.samples.size();
}

ChromaFormat parse_colorspace(const std::string& token) {
  if (token == "Cmono") return ChromaFormat::kMono;
  if (token == "C420" || token == "C420jpeg" || token == "C420mpeg2" || token == "C420paldv")
    return ChromaFormat::kC420;
  throw FormatError("unsupported Y4M colorspace: " + token);
}

}  // namespace

Y4mVideo read_y4m(std::istream& in) {
  char sig[9];
  in.read(sig, 9);
  if (in.gcount() != 9 || std::string(sig, 9) != kSignature)
    throw FormatError("bad Y4M signature");

  std::string params;
  if (!std::getline(in, params)) throw FormatError("truncated Y4M header");

  Y4mVideo video;
  video.meta.header_params = params;
  bool have_w = false, have_h = false;
  std::istringstream tokens(params);
  std::string tok;
  while (tokens >> tok) {
    switch (tok[0]) {
      case 'W':
        video.meta.width = std::stoi(tok.substr(1));
        have_w = true;
        break;
      case 'H':
        video.meta.height = std::stoi(tok.substr(1));
        have_h = true;
        break;
      case 'C':
        video.meta.format = parse_colorspace(tok);
        break;
      default:
        break;  // F/I/A/X parameters carried verbatim in header_params
    }
  }
  if (!have_w || !have_h || video.meta.width <= 0 || video.meta.height <= 0)
    throw FormatError("Y4M header missing valid W/H parameters");

  for (int index = 1;; ++index) {
    std::string marker;
    if (!std::getline(in, marker)) break;  // clean end of stream
    if (marker.rfind("FRAME", 0) != 0)
      throw FormatError("Y4M frame " + std::to_string(index) + ": bad FRAME marker");
    Frame f(video.meta.width, video.meta.height, video.meta.format);
    bool ok = read_plane(in, f.luma);
    if (ok && f.has_chroma()) ok = read_plane(in, f.cb) && read_plane(in, f.cr);
    if (!ok)
      throw FormatError("Y4M frame " + std::to_string(index) + ": truncated frame payload");
    video.frames.push_back(std::move(f));
  }
  return video;
}

void write_y4m(std::ostream& out, const std::vector<Frame>& frames, const Y4mMeta* meta) {
  if (frames.empty()) throw InputError("write_y4m: no frames");
  const Frame& first = frames.front();
  first.validate();
  for (const Frame& f : frames) {
    if (f.width != first.width || f.height != first.height || f.format != first.format)
      throw DimensionError("write_y4m: frames must share geometry");
  }
  if (meta) {
    if (meta->width != first.width || meta->height != first.height ||
        meta->format != first.format)
      throw DimensionError("write_y4m: metadata does not match the frames");
    out << kSignature << meta->header_params << '\n';
  } else {
    out << kSignature << " W" << first.width << " H" << first.height << " F25:1 "
        << (first.format == ChromaFormat::kMono ? "Cmono" : "C420") << '\n';
  }
  for (const Frame& f : frames) {
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(f.luma.samples.data()),
              std::streamsize(f.luma.samples.size()));
    if (f.has_chroma()) {
      out.write(reinterpret_cast<const char*>(f.cb.samples.data()),
                std::streamsize(f.cb.samples.size()));
      out.write(reinterpret_cast<const char*>(f.cr.samples.data()),
                std::streamsize(f.cr.samples.size()));
    }
  }
}

Y4mVideo read_y4m_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_y4m(in);
}

void write_y4m_file(const std::filesystem::path& path, const std::vector<Frame>& frames,
                    const Y4mMeta* meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot create " + path.string());
  write_y4m(out, frames, meta);
}

}  // namespace drfc
