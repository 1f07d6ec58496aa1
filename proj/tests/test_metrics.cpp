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

#include <gtest/gtest.h>

#include <cmath>

#include "qblur/fixtures.hpp"
#include "test_util.hpp"

using namespace qblur;

namespace {

double brute_image_detail(const Image& img) {
  double sum = 0.0;
  for (std::int64_t y = 0; y < img.height(); ++y) {
    for (std::int64_t x = 0; x < img.width(); ++x) {
      double worst = 0.0;
      for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const auto nx = x + dx;
        const auto ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= img.width() || ny >= img.height()) continue;
        worst = std::max(worst, std::abs(img.at(x, y) - img.at(nx, ny)));
      }
      sum += worst * worst;
    }
  }
  return std::sqrt(sum / static_cast<double>(img.size()));
}

// Mirror the left half onto the right so the image is fixed by the
// coarsest x reflection only.
Image mirrored_fixture() {
  const auto base = testutil::random_image(8, 8, 77, 0.1);
  Image img(8, 8);
  for (std::uint32_t y = 0; y < 8; ++y) {
    for (std::uint32_t x = 0; x < 8; ++x) img.at(x, y) = base.at(std::min(x, 7 - x), y);
  }
  return img;
}

}  // namespace

TEST(Rms, examples) {
  EXPECT_EQ(rms_difference(Image(3, 3, 0.4), Image(3, 3, 0.4)), 0.0);
  EXPECT_DOUBLE_EQ(rms_difference(Image(4, 2, 1.0), Image(4, 2, 0.0)), 1.0);
  EXPECT_NEAR(rms_difference(Image(2, 1, {0.0, 1.0}), Image(2, 1, 1.0)), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(rms_difference(Image(2, 1), Image(1, 2)), std::domain_error);
}

TEST(Asymmetry, uniform_is_zero) {
  EXPECT_EQ(asymmetry(Image(16, 8, 0.6)), 0.0);
  EXPECT_EQ(asymmetry(Image(5, 7, 0.0)), 0.0);
}

TEST(Asymmetry, single_symmetry_contributes_nothing) {
  const auto img = mirrored_fixture();
  const auto layout = img.layout();
  double total = 0.0;
  for (const auto& level : layout.levels()) {
    const double term = rms_difference(img, flip_image(img, level));
    if (level.axis == Axis::x && level.level == 0) {
      EXPECT_EQ(term, 0.0);
    } else {
      EXPECT_GT(term, 0.01);
    }
    total += term;
  }
  EXPECT_NEAR(asymmetry(img), total / layout.num_qubits(), 1e-15);
}

TEST(Asymmetry, invariant_under_any_flip) {
  const auto img = testutil::random_image(16, 32, 5);
  for (const auto& level : img.layout().levels()) {
    EXPECT_NEAR(asymmetry(flip_image(img, level)), asymmetry(img), 1e-14);
  }
}

TEST(ImageDetail, examples) {
  EXPECT_EQ(image_detail(Image(8, 8, 0.2)), 0.0);
  EXPECT_DOUBLE_EQ(image_detail(checkerboard_fixture(8, 8)), 1.0);

  Image dot(8, 8);
  dot.at(3, 4) = 1.0;
  // The dot and its four neighbours each see a difference of 1.
  EXPECT_NEAR(image_detail(dot), brute_image_detail(dot), 1e-15);
  EXPECT_NEAR(image_detail(dot), std::sqrt(5.0 / 64.0), 1e-15);
}

TEST(ImageDetail, matches_brute_force) {
  for (auto [w, h] : {std::pair{8u, 8u}, {13u, 5u}, {1u, 9u}}) {
    const auto img = testutil::random_image(w, h, w * h);
    EXPECT_NEAR(image_detail(img), brute_image_detail(img), 1e-14);
  }
}

TEST(StateDetail, requires_power_of_two) {
  EXPECT_THROW(state_detail(Image(6, 8, 1.0)), std::domain_error);
  EXPECT_EQ(state_detail(Image(8, 4, 0.7)), 0.0);
}

TEST(StateDetail, agrees_with_image_detail_on_column_stripes) {
  Image stripes(16, 16);
  for (std::uint32_t y = 0; y < 16; ++y) {
    for (std::uint32_t x = 0; x < 16; ++x) stripes.at(x, y) = x % 2 ? 0.3 : 0.8;
  }
  EXPECT_NEAR(image_detail(stripes), 0.5, 1e-15);
  EXPECT_NEAR(state_detail(stripes), 0.5, 1e-15);
}

TEST(StateDetail, invariant_under_flips) {
  const auto img = testutil::random_image(16, 16, 9);
  for (const auto& level : img.layout().levels()) {
    EXPECT_NEAR(state_detail(flip_image(img, level)), state_detail(img), 1e-14);
  }
  const auto flipped = flip_all(img);
  EXPECT_NEAR(state_detail(flipped), state_detail(img), 1e-14);
  EXPECT_NE(image_detail(flipped), image_detail(img));
}

TEST(Metrics, stay_in_unit_range) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto img = testutil::random_image(16, 16, seed);
    const auto record = compute_metrics(img, checkerboard_fixture(16, 16));
    for (double v : {record.diff, record.asymmetry, record.image_detail, record.state_detail}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
  const auto c = compute_metrics(checkerboard_fixture(8, 8), checkerboard_fixture(8, 8));
  EXPECT_EQ(c.diff, 0.0);
  EXPECT_DOUBLE_EQ(c.state_detail, 1.0);
}
