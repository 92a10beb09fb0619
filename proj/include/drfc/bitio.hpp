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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "drfc/errors.hpp"

namespace drfc {

// MSB-first bit writer over a growing byte buffer. Single-owner, sequential.
class BitSink {
 public:
  void put_bit(int b);
  // Writes the n low bits of v, most significant first. n in [0, 64].
  void put_bits(uint64_t v, int n);
  // Exp-Golomb: (bit_width(v+1) - 1) zeros, then v+1 in binary. v <= 2^32 - 2.
  void put_ue(uint64_t v);
  // Signed mapping: k > 0 -> ue(2k - 1), k <= 0 -> ue(-2k).
  void put_se(int64_t v);
  // Zero-pads to the next byte boundary.
  void align();

  size_t bit_size() const { return bit_pos_; }
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  // Aligns and releases the buffer.
  std::vector<uint8_t> take();

 private:
  std::vector<uint8_t> bytes_;
  size_t bit_pos_ = 0;
};

// MSB-first bit reader; throws CorruptionError on reads past the end.
class BitSource {
 public:
  explicit BitSource(std::span<const uint8_t> data) : data_(data) {}

  int get_bit();
  uint64_t get_bits(int n);
  uint64_t get_ue();
  int64_t get_se();
  // Skips to the next byte boundary; the skipped padding must be zero.
  void align();

  size_t bit_pos() const { return bit_pos_; }
  size_t bits_left() const { return data_.size() * 8 - bit_pos_; }

 private:
  std::span<const uint8_t> data_;
  size_t bit_pos_ = 0;
};

// Exact serialized sizes, used for rate accounting.
int ue_bit_length(uint64_t v);
int se_bit_length(int64_t v);

// CRC-32, polynomial 0x04C11DB7 reflected, init and final xor 0xFFFFFFFF
// (the gzip/zlib convention).
class Crc32 {
 public:
  void update(std::span<const uint8_t> data);
  uint32_t value() const { return state_ ^ 0xFFFFFFFFu; }

 private:
  uint32_t state_ = 0xFFFFFFFFu;
};

uint32_t crc32(std::span<const uint8_t> data);

}  // namespace drfc
