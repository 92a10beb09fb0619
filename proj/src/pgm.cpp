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

#include "drfc/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace drfc {

namespace {

// Skips whitespace and '#' comment lines between header fields.
int read_header_int(std::istream& in) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) throw FormatError("malformed PGM header");
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  if (c != EOF) in.unget();
  return value;
}

}  // namespace

Frame read_pgm(std::istream& in) {
  char magic[2];
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P')
    throw FormatError("not a PGM file");
  if (magic[1] != '5')
    throw FormatError(std::string("unsupported PGM variant P") + magic[1] +
                      " (binary P5 required)");
  const int width = read_header_int(in);
  const int height = read_header_int(in);
  const int maxval = read_header_int(in);
  if (width <= 0 || height <= 0) throw FormatError("PGM dimensions must be positive");
  if (maxval != 255) throw FormatError("PGM maxval must be 255, got " + std::to_string(maxval));
  in.get();  // the single whitespace before the raster

  Frame f(width, height, ChromaFormat::kMono);
  in.read(reinterpret_cast<char*>(f.luma.samples.data()),
          std::streamsize(f.luma.samples.size()));
  if (size_t(in.gcount()) != f.luma.samples.size()) throw FormatError("truncated PGM raster");
  return f;
}

void write_pgm(std::ostream& out, const Frame& f) {
  f.validate();
  if (f.has_chroma()) throw InputError("write_pgm accepts mono frames only");
  out << "P5\n" << f.width << ' ' << f.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(f.luma.samples.data()),
            std::streamsize(f.luma.samples.size()));
}

Frame read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm_file(const std::filesystem::path& path, const Frame& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot create " + path.string());
  write_pgm(out, f);
}

}  // namespace drfc
