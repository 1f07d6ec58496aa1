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

#include "qblur/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qblur {

double rms_difference(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::domain_error("rms_difference: image dimensions differ");
  }
  const auto va = a.values();
  const auto vb = b.values();
  double total = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double d = va[i] - vb[i];
    total += d * d;
  }
  return std::sqrt(total / static_cast<double>(va.size()));
}

double asymmetry(const Image& image) {
  const auto levels = image.layout().levels();
  if (levels.empty()) return 0.0;
  double total = 0.0;
  for (const auto& level : levels) total += rms_difference(image, flip_image(image, level));
  return total / static_cast<double>(levels.size());
}

double image_detail(const Image& image) {
  const std::uint32_t w = image.width();
  const std::uint32_t h = image.height();
  double total = 0.0;
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = 0; x < w; ++x) {
      const double v = image.at(x, y);
      double worst = 0.0;
      if (x > 0) worst = std::max(worst, std::abs(v - image.at(x - 1, y)));
      if (x + 1 < w) worst = std::max(worst, std::abs(v - image.at(x + 1, y)));
      if (y > 0) worst = std::max(worst, std::abs(v - image.at(x, y - 1)));
      if (y + 1 < h) worst = std::max(worst, std::abs(v - image.at(x, y + 1)));
      total += worst * worst;
    }
  }
  return std::sqrt(total / static_cast<double>(image.size()));
}

double state_detail(const Image& image) {
  if (!std::has_single_bit(image.width()) || !std::has_single_bit(image.height())) {
    throw std::domain_error("state_detail: needs power-of-two dimensions");
  }
  const auto layout = image.layout();
  const auto levels = layout.levels();
  std::vector<std::vector<std::uint32_t>> perms;
  perms.reserve(levels.size());
  for (const auto& level : levels) {
    perms.push_back(reflection_permutation(level.level, layout.bits(level.axis)));
  }
  double total = 0.0;
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      const double v = image.at(x, y);
      double worst = 0.0;
      for (std::size_t j = 0; j < levels.size(); ++j) {
        const double partner = levels[j].axis == Axis::x ? image.at(perms[j][x], y)
                                                         : image.at(x, perms[j][y]);
        const double d = v - partner;
        worst = std::max(worst, d * d);
      }
      total += worst;
    }
  }
  return std::sqrt(total / static_cast<double>(image.size()));
}

MetricsRecord compute_metrics(const Image& image, const Image& original) {
  return {rms_difference(image, original), asymmetry(image), image_detail(image),
          state_detail(image)};
}

}  // namespace qblur
