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

#include "qblur/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qblur {

namespace {

void check_kernel(const Image& image, int k) {
  if (k < 1 || k % 2 == 0) {
    throw std::domain_error("kernel size must be odd and positive, got " + std::to_string(k));
  }
  const std::int64_t limit = 2 * std::int64_t{std::min(image.width(), image.height())} - 1;
  if (k > limit) {
    throw std::domain_error("kernel size " + std::to_string(k) + " exceeds " +
                            std::to_string(limit) + " for this image");
  }
}

// One-dimensional convolution along x (horizontal) or y.
std::vector<double> convolve_axis(const std::vector<double>& src, std::uint32_t w,
                                  std::uint32_t h, const std::vector<double>& taps,
                                  bool horizontal) {
  const std::int64_t radius = static_cast<std::int64_t>(taps.size() / 2);
  std::vector<double> out(src.size(), 0.0);
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::int64_t t = -radius; t <= radius; ++t) {
        const std::int64_t sx = horizontal ? reflect_index(x + t, w) : x;
        const std::int64_t sy = horizontal ? y : reflect_index(y + t, h);
        acc += taps[t + radius] * src[sy * w + sx];
      }
      out[y * w + x] = acc;
    }
  }
  return out;
}

Image from_values(std::uint32_t w, std::uint32_t h, std::vector<double> values) {
  for (double& v : values) v = std::clamp(v, 0.0, 1.0);
  return Image(w, h, std::move(values));
}

}  // namespace

std::int64_t reflect_index(std::int64_t i, std::int64_t extent) {
  if (extent == 1) return 0;
  const std::int64_t period = 2 * (extent - 1);
  i %= period;
  if (i < 0) i += period;
  return i < extent ? i : period - i;
}

Image box_blur(const Image& image, int k) {
  check_kernel(image, k);
  const std::vector<double> taps(k, 1.0 / k);
  std::vector<double> values(image.values().begin(), image.values().end());
  values = convolve_axis(values, image.width(), image.height(), taps, true);
  values = convolve_axis(values, image.width(), image.height(), taps, false);
  return from_values(image.width(), image.height(), std::move(values));
}

double default_gaussian_sigma(int k) { return 0.3 * ((k - 1) * 0.5 - 1) + 0.8; }

std::vector<double> gaussian_kernel(int k, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("gaussian sigma must be positive");
  std::vector<double> taps(k);
  const int radius = k / 2;
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double d = i - radius;
    taps[i] = std::exp(-d * d / (2 * sigma * sigma));
    total += taps[i];
  }
  for (double& t : taps) t /= total;
  return taps;
}

Image gaussian_blur(const Image& image, int k, std::optional<double> sigma) {
  check_kernel(image, k);
  const auto taps = gaussian_kernel(k, sigma.value_or(default_gaussian_sigma(k)));
  std::vector<double> values(image.values().begin(), image.values().end());
  values = convolve_axis(values, image.width(), image.height(), taps, true);
  values = convolve_axis(values, image.width(), image.height(), taps, false);
  return from_values(image.width(), image.height(), std::move(values));
}

Image median_filter(const Image& image, int k) {
  check_kernel(image, k);
  const std::int64_t radius = k / 2;
  const std::int64_t w = image.width();
  const std::int64_t h = image.height();
  Image out(image.width(), image.height());
  std::vector<double> window(static_cast<std::size_t>(k) * k);
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      std::size_t n = 0;
      for (std::int64_t dy = -radius; dy <= radius; ++dy) {
        const auto sy = static_cast<std::uint32_t>(reflect_index(y + dy, h));
        for (std::int64_t dx = -radius; dx <= radius; ++dx) {
          window[n++] = image.at(static_cast<std::uint32_t>(reflect_index(x + dx, w)), sy);
        }
      }
      auto middle = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
      std::nth_element(window.begin(), middle, window.end());
      out.at(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)) = *middle;
    }
  }
  return out;
}

}  // namespace qblur
