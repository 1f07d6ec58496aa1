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

#include "qblur/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>

namespace qblur {

Image::Image(std::uint32_t width, std::uint32_t height, double fill)
    : Image(width, height,
            std::vector<double>(static_cast<std::size_t>(width) * height,
                                fill)) {}

Image::Image(std::uint32_t width, std::uint32_t height,
             std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width == 0 || height == 0) {
    throw std::domain_error("Image: dimensions must be >= 1");
  }
  if (values_.size() != static_cast<std::size_t>(width) * height) {
    throw std::domain_error("Image: expected " +
                            std::to_string(std::size_t{width} * height) +
                            " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw std::domain_error("Image: value " + std::to_string(v) +
                              " outside [0, 1]");
    }
  }
}

double Image::max_value() const {
  if (values_.empty()) return 0.0;
  return *std::max_element(values_.begin(), values_.end());
}

Image Image::rescaled_to_max() const {
  const double peak = max_value();
  if (peak <= 0.0) return *this;
  Image out = *this;
  for (double& v : out.values_) v = std::min(1.0, v / peak);
  return out;
}

namespace {

class PgmReader {
 public:
  PgmReader(std::span<const std::uint8_t> bytes, std::size_t start)
      : bytes_(bytes), pos_(start) {}

  std::size_t offset() const { return pos_; }
  std::size_t token_start() const { return token_start_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long read_uint(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    token_start_ = start;
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFul) throw PgmParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= bytes_.size()) {
        throw PgmParseError(std::string("truncated file reading ") + what, pos_);
      }
      throw PgmParseError(std::string("expected ") + what, pos_);
    }
    return value;
  }

  std::uint8_t next_byte() {
    if (pos_ >= bytes_.size()) throw PgmParseError("truncated raster", pos_);
    return bytes_[pos_++];
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmParseError("missing P2/P5 magic number", 0);
  }
  const bool binary = bytes[1] == '5';
  PgmReader in(bytes, 2);
  const auto width = in.read_uint("width");
  const auto height = in.read_uint("height");
  const auto maxval = in.read_uint("maxval");
  const std::size_t maxval_offset = in.token_start();
  if (width == 0 || height == 0) {
    throw PgmParseError("zero image dimension", maxval_offset);
  }
  if (maxval == 0 || maxval > 255) {
    throw PgmParseError("maxval must be in [1, 255]", maxval_offset);
  }

  std::vector<double> values(static_cast<std::size_t>(width) * height);
  const double scale = static_cast<double>(maxval);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    const auto sep = in.next_byte();
    if (!std::isspace(sep)) throw PgmParseError("expected whitespace after maxval", in.offset() - 1);
    for (auto& v : values) {
      const auto pixel = in.next_byte();
      if (pixel > maxval) throw PgmParseError("pixel exceeds maxval", in.offset() - 1);
      v = pixel / scale;
    }
  } else {
    for (auto& v : values) {
      const auto pixel = in.read_uint("pixel");
      if (pixel > maxval) throw PgmParseError("pixel exceeds maxval", in.token_start());
      v = static_cast<double>(pixel) / scale;
    }
  }
  return Image(static_cast<std::uint32_t>(width),
               static_cast<std::uint32_t>(height), std::move(values));
}

Image read_pgm(const std::string& bytes) {
  return read_pgm(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()),
                            bytes.size()));
}

std::vector<std::uint8_t> write_pgm(const Image& image, bool binary) {
  const std::string header = std::string(binary ? "P5" : "P2") + "\n" +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  auto quantize = [](double h) {
    return static_cast<std::uint8_t>(std::floor(h * 255.0 + 0.5));
  };
  if (binary) {
    for (double h : image.values()) out.push_back(quantize(h));
    return out;
  }
  std::size_t column = 0;
  for (double h : image.values()) {
    const auto text = std::to_string(quantize(h));
    out.insert(out.end(), text.begin(), text.end());
    out.push_back(++column % image.width() == 0 ? '\n' : ' ');
  }
  return out;
}

Image load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const Image& image, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  const auto bytes = write_pgm(image, binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

Image flip_image(const Image& image, BitLevel level) {
  const auto layout = image.layout();
  const int m = layout.bits(level.axis);
  if (level.level < 0 || level.level >= m) {
    throw std::domain_error("flip_image: level " + std::to_string(level.level) +
                            " invalid for this axis");
  }
  const auto perm = reflection_permutation(level.level, m);
  Image out(image.width(), image.height());
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      const std::uint32_t sx = level.axis == Axis::x ? perm[x] : x;
      const std::uint32_t sy = level.axis == Axis::y ? perm[y] : y;
      if (sx < image.width() && sy < image.height()) out.at(x, y) = image.at(sx, sy);
    }
  }
  return out;
}

Image flip_all(const Image& image) {
  Image out = image;
  for (const auto& level : image.layout().levels()) out = flip_image(out, level);
  return out;
}

}  // namespace qblur
