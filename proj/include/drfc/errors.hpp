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

#include <stdexcept>

namespace drfc {

// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value outside its documented domain (pose coordinate, QP, radius, ...).
struct RangeError : Error {
  using Error::Error;
};

// Mismatched frame / plane / sequence geometry.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed input file or container header.
struct FormatError : Error {
  using Error::Error;
};

// Bitstream truncation or corruption detected while decoding.
struct CorruptionError : Error {
  using Error::Error;
};

// External forward-reference store has no frame for the requested index.
struct MissingFrameError : Error {
  using Error::Error;
};

// Inconsistent caller-supplied inputs (pose count, missing store, ...).
struct InputError : Error {
  using Error::Error;
};

}  // namespace drfc
