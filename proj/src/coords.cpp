// Copyright 2026 The qblur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qblur/coords.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qblur {

std::uint64_t gray_encode(std::uint64_t k, int bits) {
  if (bits < 0 || bits > 63 || k >= (std::uint64_t{1} << bits)) {
    throw std::domain_error("gray_encode: index " + std::to_string(k) +
                            " out of range for " + std::to_string(bits) +
                            " bits");
  }
  return k ^ (k >> 1);
}

std::uint64_t gray_decode(std::uint64_t gray) {
  std::uint64_t k = gray;
  for (int shift = 1; shift < 64; shift <<= 1) {
    k ^= k >> shift;
  }
  return k;
}

int ceil_log2(std::uint64_t count) {
  if (count <= 1) return 0;
  return std::bit_width(count - 1);
}

RegisterLayout::RegisterLayout(std::uint32_t width, std::uint32_t height)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw std::domain_error("RegisterLayout: image dimensions must be >= 1");
  }
  bits_x_ = ceil_log2(width);
  bits_y_ = ceil_log2(height);
}

std::uint64_t RegisterLayout::coord_to_index(std::uint32_t x,
                                             std::uint32_t y) const {
  if (x >= width_ || y >= height_) {
    throw std::domain_error("coord_to_index: (" + std::to_string(x) + "," +
                            std::to_string(y) + ") outside " +
                            std::to_string(width_) + "x" +
                            std::to_string(height_));
  }
  return (gray_encode(x, bits_x_) << bits_y_) | gray_encode(y, bits_y_);
}

std::optional<Coord> RegisterLayout::index_to_coord(std::uint64_t index) const {
  const std::uint64_t y_mask = (std::uint64_t{1} << bits_y_) - 1;
  const auto x = gray_decode(index >> bits_y_);
  const auto y = gray_decode(index & y_mask);
  if (x >= width_ || y >= height_) return std::nullopt;
  return Coord{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

int RegisterLayout::qubit(BitLevel level) const {
  const int m = bits(level.axis);
  if (level.level < 0 || level.level >= m) {
    throw std::domain_error("qubit: level " + std::to_string(level.level) +
                            " invalid for a " + std::to_string(m) +
                            "-bit register");
  }
  const int position = m - 1 - level.level;
  return level.axis == Axis::x ? bits_y_ + position : position;
}

BitLevel RegisterLayout::level_of(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits()) {
    throw std::domain_error("level_of: qubit " + std::to_string(qubit) +
                            " out of range");
  }
  if (qubit < bits_y_) return {Axis::y, bits_y_ - 1 - qubit};
  return {Axis::x, bits_x_ - 1 - (qubit - bits_y_)};
}

std::vector<BitLevel> RegisterLayout::levels() const {
  std::vector<BitLevel> out;
  out.reserve(num_qubits());
  for (int l = 0; l < bits_x_; ++l) out.push_back({Axis::x, l});
  for (int l = 0; l < bits_y_; ++l) out.push_back({Axis::y, l});
  return out;
}

std::vector<std::uint32_t> reflection_permutation(int level, int bits) {
  if (bits < 1 || bits > 31 || level < 0 || level >= bits) {
    throw std::domain_error("reflection_permutation: invalid level " +
                            std::to_string(level));
  }
  const std::uint64_t size = std::uint64_t{1} << bits;
  const std::uint64_t mask = std::uint64_t{1} << (bits - 1 - level);
  std::vector<std::uint32_t> perm(size);
  for (std::uint64_t k = 0; k < size; ++k) {
    perm[k] = static_cast<std::uint32_t>(gray_decode(gray_encode(k, bits) ^ mask));
  }
  return perm;
}

}  // namespace qblur
