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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qblur/coords.hpp"

namespace qblur {

/// Grayscale image with brightness values in [0, 1], stored row-major.
class Image {
 public:
  Image() = default;
  /// Filled with `fill`.
  Image(std::uint32_t width, std::uint32_t height, double fill = 0.0);
  /// Throws std::domain_error on size mismatch or values outside [0, 1].
  Image(std::uint32_t width, std::uint32_t height, std::vector<double> values);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double at(std::uint32_t x, std::uint32_t y) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  /// Caller keeps the value in [0, 1].
  double& at(std::uint32_t x, std::uint32_t y) {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const double> values() const { return values_; }
  double max_value() const;
  RegisterLayout layout() const { return RegisterLayout(width_, height_); }

  /// Scaled so the maximum is 1. All-zero images come back unchanged.
  Image rescaled_to_max() const;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::vector<double> values_;
};

class PgmParseError : public std::runtime_error {
 public:
  PgmParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses P2 (ASCII) or P5 (binary) PGM with maxval <= 255.
Image read_pgm(std::span<const std::uint8_t> bytes);
Image read_pgm(const std::string& bytes);
/// Pixel byte = floor(h * 255 + 0.5).
std::vector<std::uint8_t> write_pgm(const Image& image, bool binary = true);

Image load_pgm(const std::string& path);
void save_pgm(const Image& image, const std::string& path, bool binary = true);

/// Reflection of one axis by flipping the given level's Gray bit. Pixels
/// mapped from padding coordinates (non power-of-two axes) become 0.
Image flip_image(const Image& image, BitLevel level);
/// Composition of flips on every level of both axes.
Image flip_all(const Image& image);

}  // namespace qblur
