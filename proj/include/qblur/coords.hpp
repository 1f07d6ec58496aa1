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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qblur {

/// Reflected binary code of `k` on `bits` bits: k XOR (k >> 1).
/// Throws std::domain_error when k >= 2^bits.
std::uint64_t gray_encode(std::uint64_t k, int bits);

/// Inverse of gray_encode.
std::uint64_t gray_decode(std::uint64_t gray);

/// Smallest m with 2^m >= count.
int ceil_log2(std::uint64_t count);

enum class Axis { x, y };

/// One qubit of an image register, named by what flipping it does.
///
/// Flipping the level-`level` bit reflects each of 2^level contiguous
/// coordinate segments of length 2^(m - level). Level 0 mirrors the whole
/// axis about its middle; level m-1 swaps adjacent coordinate pairs.
struct BitLevel {
  Axis axis = Axis::x;
  int level = 0;

  friend bool operator==(const BitLevel&, const BitLevel&) = default;
};

struct Coord {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Qubit layout of a W x H image.
///
/// Basis index = gray(x) * 2^bits_y + gray(y); the x register sits in the
/// high bits. Qubit q is bit q of the basis index (least significant = 0).
/// Indices whose decoded x >= W or y >= H are padding.
class RegisterLayout {
 public:
  RegisterLayout(std::uint32_t width, std::uint32_t height);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  int bits_x() const { return bits_x_; }
  int bits_y() const { return bits_y_; }
  int num_qubits() const { return bits_x_ + bits_y_; }
  std::uint64_t padded_width() const { return std::uint64_t{1} << bits_x_; }
  std::uint64_t padded_height() const { return std::uint64_t{1} << bits_y_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits(); }
  int bits(Axis axis) const { return axis == Axis::x ? bits_x_ : bits_y_; }

  /// Throws std::domain_error for out-of-bounds coordinates.
  std::uint64_t coord_to_index(std::uint32_t x, std::uint32_t y) const;
  /// Returns nullopt for padding indices.
  std::optional<Coord> index_to_coord(std::uint64_t index) const;

  int qubit(BitLevel level) const;
  BitLevel level_of(int qubit) const;
  /// All qubits as levels, x register first, coarse to fine.
  std::vector<BitLevel> levels() const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  int bits_x_;
  int bits_y_;
};

/// Permutation of [0, 2^bits) induced on one axis by flipping the given
/// level's Gray bit. Always an involution.
std::vector<std::uint32_t> reflection_permutation(int level, int bits);

}  // namespace qblur
