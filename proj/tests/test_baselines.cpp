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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qblur/fixtures.hpp"
#include "qblur/metrics.hpp"
#include "test_util.hpp"

using namespace qblur;

namespace {

// Reflect-101 by unfolding one period of length 2n-2.
std::int64_t mirror(std::int64_t i, std::int64_t n) {
  if (n == 1) return 0;
  const std::int64_t period = 2 * n - 2;
  i = ((i % period) + period) % period;
  return i < n ? i : period - i;
}

std::vector<double> window(const Image& img, std::int64_t x, std::int64_t y, int k) {
  std::vector<double> out;
  const int r = k / 2;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      out.push_back(img.at(mirror(x + dx, img.width()), mirror(y + dy, img.height())));
    }
  }
  return out;
}

Image box_oracle(const Image& img, int k) {
  Image out(img.width(), img.height());
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      const auto w = window(img, x, y, k);
      double s = 0.0;
      for (double v : w) s += v;
      out.at(x, y) = s / static_cast<double>(w.size());
    }
  }
  return out;
}

Image median_oracle(const Image& img, int k) {
  Image out(img.width(), img.height());
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      auto w = window(img, x, y, k);
      std::sort(w.begin(), w.end());
      out.at(x, y) = w[w.size() / 2];
    }
  }
  return out;
}

// Full 2-D kernel, not separated.
Image gaussian_oracle(const Image& img, int k, double sigma) {
  const int r = k / 2;
  std::vector<double> kernel;
  double norm = 0.0;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      kernel.push_back(std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma)));
      norm += kernel.back();
    }
  }
  Image out(img.width(), img.height());
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      const auto w = window(img, x, y, k);
      double s = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) s += kernel[i] * w[i];
      out.at(x, y) = s / norm;
    }
  }
  return out;
}

}  // namespace

TEST(Baselines, reflect_index) {
  EXPECT_EQ(reflect_index(-1, 5), 1);
  EXPECT_EQ(reflect_index(5, 5), 3);
  EXPECT_EQ(reflect_index(2, 5), 2);
  for (std::int64_t i = -20; i < 20; ++i) EXPECT_EQ(reflect_index(i, 7), mirror(i, 7)) << i;
}

TEST(Baselines, size_one_is_identity) {
  const auto img = testutil::random_image(9, 7, 1);
  EXPECT_EQ(box_blur(img, 1), img);
  EXPECT_EQ(gaussian_blur(img, 1), img);
  EXPECT_EQ(median_filter(img, 1), img);
}

TEST(Baselines, uniform_is_fixed_point) {
  const Image flat(12, 10, 0.37);
  for (int k : {3, 5, 9, 19}) {
    EXPECT_LE(testutil::max_abs_diff(box_blur(flat, k), flat), 1e-15);
    EXPECT_LE(testutil::max_abs_diff(gaussian_blur(flat, k), flat), 1e-15);
    EXPECT_EQ(median_filter(flat, k), flat);
  }
}

TEST(Baselines, errors) {
  const Image img(8, 6, 0.5);
  for (int k : {0, 2, -1, 13}) {
    EXPECT_THROW(box_blur(img, k), std::domain_error) << k;
    EXPECT_THROW(gaussian_blur(img, k), std::domain_error) << k;
    EXPECT_THROW(median_filter(img, k), std::domain_error) << k;
  }
  EXPECT_NO_THROW(box_blur(img, 11));
  EXPECT_THROW(gaussian_blur(img, 3, 0.0), std::domain_error);
  EXPECT_THROW(gaussian_blur(img, 3, -1.0), std::domain_error);
}

TEST(Gaussian, default_sigma) {
  EXPECT_DOUBLE_EQ(default_gaussian_sigma(3), 0.8);
  EXPECT_DOUBLE_EQ(default_gaussian_sigma(7), 0.3 * 2 + 0.8);
}

TEST(Gaussian, impulse_gives_normalized_profile) {
  Image impulse(15, 15);
  impulse.at(7, 7) = 1.0;
  const auto out = gaussian_blur(impulse, 5, 1.2);
  double total = 0.0;
  for (double v : out.values()) total += v;
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_EQ(out.max_value(), out.at(7, 7));
  EXPECT_NEAR(out.at(6, 7), out.at(8, 7), 1e-16);
  EXPECT_NEAR(out.at(6, 7) / out.at(7, 7), std::exp(-1 / (2 * 1.2 * 1.2)), 1e-12);

  const auto kernel = gaussian_kernel(5, 1.2);
  double ksum = 0.0;
  for (double v : kernel) ksum += v;
  EXPECT_NEAR(ksum, 1.0, 1e-15);
}

TEST(Gaussian, matches_direct_convolution) {
  for (auto [w, h, k] : {std::tuple{16u, 16u, 5}, {9u, 13u, 7}, {5u, 5u, 9}}) {
    const auto img = testutil::random_image(w, h, k);
    EXPECT_LE(testutil::max_abs_diff(gaussian_blur(img, k), gaussian_oracle(img, k, default_gaussian_sigma(k))),
              1e-10);
    EXPECT_LE(testutil::max_abs_diff(gaussian_blur(img, k, 2.5), gaussian_oracle(img, k, 2.5)), 1e-10);
  }
}

TEST(Box, matches_window_mean) {
  for (auto [w, h, k] : {std::tuple{16u, 16u, 3}, {9u, 13u, 7}, {4u, 6u, 7}}) {
    const auto img = testutil::random_image(w, h, k + 100);
    EXPECT_LE(testutil::max_abs_diff(box_blur(img, k), box_oracle(img, k)), 1e-12);
  }
}

TEST(Median, matches_window_median) {
  for (auto [w, h, k] : {std::tuple{16u, 16u, 3}, {9u, 13u, 5}, {4u, 6u, 7}}) {
    const auto img = testutil::random_image(w, h, k + 200);
    EXPECT_EQ(median_filter(img, k), median_oracle(img, k));
  }
}

TEST(Median, removes_outlier_and_keeps_edges) {
  Image salt(9, 9, 0.2);
  salt.at(4, 4) = 1.0;
  EXPECT_EQ(median_filter(salt, 3), Image(9, 9, 0.2));

  Image step(16, 16, 0.1);
  for (std::uint32_t y = 0; y < 16; ++y) {
    for (std::uint32_t x = 8; x < 16; ++x) step.at(x, y) = 0.9;
  }
  EXPECT_EQ(median_filter(step, 5), step);
  EXPECT_GT(image_detail(median_filter(step, 5)), image_detail(box_blur(step, 5)));
}

TEST(Baselines, preserve_range) {
  const auto img = testutil::random_image(20, 20, 3);
  for (int k : {3, 11, 31}) {
    for (const auto& out : {box_blur(img, k), gaussian_blur(img, k), median_filter(img, k)}) {
      EXPECT_GE(*std::min_element(out.values().begin(), out.values().end()), 0.0);
      EXPECT_LE(out.max_value(), 1.0);
    }
  }
}

TEST(Baselines, stronger_kernels_blur_more) {
  const auto img = blob_scene_fixture(64, 64);
  for (int which = 0; which < 3; ++which) {
    double last_diff = 0.0;
    double last_detail = image_detail(img);
    int blips = 0;
    for (int k = 3; k <= 31; k += 2) {
      const Image out = which == 0 ? box_blur(img, k) : which == 1 ? gaussian_blur(img, k) : median_filter(img, k);
      const double diff = rms_difference(out, img);
      const double detail = image_detail(out);
      if (diff < last_diff - 1e-12 || detail > last_detail + 1e-12) ++blips;
      last_diff = diff;
      last_detail = detail;
    }
    EXPECT_LE(blips, which == 2 ? 2 : 0) << "filter " << which;
  }
}
