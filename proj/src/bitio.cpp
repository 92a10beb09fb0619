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

#include "drfc/bitio.hpp"

#include <bit>

namespace drfc {

void BitSink::put_bit(int b) {
  const size_t byte = bit_pos_ >> 3;
  if (byte == bytes_.size()) bytes_.push_back(0);
  if (b) bytes_[byte] |= uint8_t(0x80u >> (bit_pos_ & 7));
  ++bit_pos_;
}

void BitSink::put_bits(uint64_t v, int n) {
  for (int i = n - 1; i >= 0; --i) put_bit(int((v >> i) & 1));
}

void BitSink::put_ue(uint64_t v) {
  if (v > 0xFFFFFFFEull) throw RangeError("ue value too large for a 32-bit prefix");
  const int n = std::bit_width(v + 1);
  put_bits(0, n - 1);
  put_bits(v + 1, n);
}

void BitSink::put_se(int64_t v) {
  put_ue(v > 0 ? uint64_t(2 * v - 1) : uint64_t(-2 * v));
}

void BitSink::align() {
  while (bit_pos_ & 7) put_bit(0);
}

std::vector<uint8_t> BitSink::take() {
  align();
  bit_pos_ = 0;
  return std::move(bytes_);
}

int BitSource::get_bit() {
  if (bit_pos_ >= data_.size() * 8) throw CorruptionError("bitstream truncated");
  const int b = (data_[bit_pos_ >> 3] >> (7 - (bit_pos_ & 7))) & 1;
  ++bit_pos_;
  return b;
}

uint64_t BitSource::get_bits(int n) {
  uint64_t v = 0;
  for (int i = 0; i < n; ++i) v = (v << 1) | uint64_t(get_bit());
  return v;
}

uint64_t BitSource::get_ue() {
  int zeros = 0;
  while (get_bit() == 0) {
    if (++zeros > 31) throw CorruptionError("malformed exp-golomb prefix");
  }
  return ((1ull << zeros) | get_bits(zeros)) - 1;
}

int64_t BitSource::get_se() {
  const uint64_t u = get_ue();
  return (u & 1) ? int64_t((u + 1) / 2) : -int64_t(u / 2);
}

void BitSource::align() {
  while (bit_pos_ & 7) {
    if (get_bit() != 0) throw CorruptionError("nonzero byte-alignment padding");
  }
}

int ue_bit_length(uint64_t v) { return 2 * std::bit_width(v + 1) - 1; }

int se_bit_length(int64_t v) {
  return ue_bit_length(v > 0 ? uint64_t(2 * v - 1) : uint64_t(-2 * v));
}

namespace {

std::array<uint32_t, 256> make_crc_table() {
  std::array<uint32_t, 256> t{};
  for (uint32_t i = 0; i < 256; ++i) {
    uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    t[i] = c;
  }
  return t;
}

const std::array<uint32_t, 256>& crc_table() {
  static const auto table = make_crc_table();
  return table;
}

}  // namespace

void Crc32::update(std::span<const uint8_t> data) {
  const auto& t = crc_table();
  for (uint8_t b : data) state_ = t[(state_ ^ b) & 0xFF] ^ (state_ >> 8);
}

uint32_t crc32(std::span<const uint8_t> data) {
  Crc32 c;
  c.update(data);
  return c.value();
}

}  // namespace drfc
