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

#include "qblur/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qblur {

namespace {

// splitmix64 finalizer, used as a position hash for the texture term.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double hash_unit(std::uint32_t x, std::uint32_t y) {
  return static_cast<double>(mix((std::uint64_t{x} << 32) | y) >> 11) * 0x1.0p-53;
}

double bump(double u, double v, double cu, double cv, double radius) {
  const double du = u - cu;
  const double dv = v - cv;
  return std::exp(-(du * du + dv * dv) / (2 * radius * radius));
}

}  // namespace

Image gradient_fixture(std::uint32_t width, std::uint32_t height) {
  Image out(width, height);
  const double span = std::max(1u, width + height - 2);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) out.at(x, y) = (x + y) / span;
  }
  return out;
}

Image checkerboard_fixture(std::uint32_t width, std::uint32_t height, std::uint32_t cell) {
  cell = std::max(1u, cell);
  Image out(width, height);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) out.at(x, y) = ((x / cell + y / cell) % 2) ? 1.0 : 0.0;
  }
  return out;
}

Image blob_scene_fixture(std::uint32_t width, std::uint32_t height) {
  Image out(width, height);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const double u = (x + 0.5) / width;
      const double v = (y + 0.5) / height;

      double h;
      if (v < 0.55) {
        h = 0.62 + 0.3 * (1.0 - v / 0.55) + 0.05 * std::sin(11 * u + 2 * v);
      } else {
        h = 0.34 + 0.08 * std::sin(47 * v + 5 * u) + 0.04 * std::sin(13 * u);
      }

      // Dark masses at both sides, unequal in size and outline.
      if (u < 0.2 + 0.07 * std::sin(9 * v + 0.4) && v < 0.82) h = 0.06 + 0.1 * v;
      if (u > 0.86 - 0.05 * std::sin(7 * v + 1.0) && v > 0.12 && v < 0.7) h = 0.14;

      // Sail and hull.
      const double sail_top = 0.22;
      const double sail_base = 0.58;
      if (v > sail_top && v < sail_base) {
        const double t = (v - sail_top) / (sail_base - sail_top);
        if (u > 0.5 - 0.02 * t && u < 0.5 + 0.14 * t) h = 1.0;
      }
      if (v >= 0.58 && v < 0.63 && u > 0.42 + 0.4 * (v - 0.58) && u < 0.68) h = 0.18;

      h += 0.35 * bump(u, v, 0.3, 0.72, 0.05) - 0.25 * bump(u, v, 0.72, 0.86, 0.06) +
           0.2 * bump(u, v, 0.36, 0.2, 0.04);
      h += 0.08 * (hash_unit(x, y) - 0.5);
      out.at(x, y) = std::clamp(h, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace qblur
