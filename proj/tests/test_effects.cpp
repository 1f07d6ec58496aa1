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

#include "qblur/effects.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numbers>

#include "qblur/metrics.hpp"
#include "test_util.hpp"

using namespace qblur;
using std::numbers::pi;

namespace {

// Mixture over every subset of flipped levels, weighted by the product of
// per-level flip probabilities.
Image mixture_oracle(const Image& image, const AngleSchedule& schedule) {
  const auto levels = image.layout().levels();
  const std::size_t n = levels.size();
  std::vector<double> acc(image.size(), 0.0);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
    double weight = 1.0;
    Image flipped = image;
    for (std::size_t j = 0; j < n; ++j) {
      const double s = std::sin(schedule.angle(levels[j]) / 2);
      const double p = s * s;
      if ((pattern >> j) & 1u) {
        weight *= p;
        flipped = flip_image(flipped, levels[j]);
      } else {
        weight *= 1.0 - p;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weight * flipped.values()[i];
  }
  for (double& v : acc) v = std::clamp(v, 0.0, 1.0);
  return Image(image.width(), image.height(), std::move(acc));
}

AngleSchedule single_level(const RegisterLayout& layout, int qubit, double theta) {
  std::vector<double> angles(layout.num_qubits(), 0.0);
  angles[qubit] = theta;
  return AngleSchedule(layout, angles);
}

}  // namespace

TEST(RxBlur, white_image_is_invariant) {
  const Image white(16, 8, 1.0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> angles(white.layout().num_qubits());
    for (double& a : angles) a = testutil::unit(rng) * 2 * pi;
    const auto out = decode(rx_blur(encode(white), AngleSchedule(white.layout(), angles)));
    EXPECT_LE(testutil::max_abs_diff(out, white), 1e-9);
  }
}

TEST(RxBlur, half_turn_is_full_flip) {
  const auto img = testutil::random_image(16, 16, 4).rescaled_to_max();
  const auto out = decode(rx_blur(encode(img), AngleSchedule::uniform(img.layout(), pi)));
  EXPECT_LE(testutil::max_abs_diff(out, flip_all(img)), 1e-9);
}

TEST(RxBlur, small_angle_first_order_interpolation) {
  const auto img = testutil::random_image(8, 8, 12, 0.05);
  const auto layout = img.layout();
  double total = 0.0;
  for (double v : img.values()) total += v;

  auto residual = [&](double theta) {
    const auto out = rx_blur(encode(img), AngleSchedule::uniform(layout, theta));
    const auto amps = std::get<Statevector>(out.state).amplitudes();
    double worst = 0.0;
    for (std::uint64_t s = 0; s < layout.dimension(); ++s) {
      const auto c = layout.index_to_coord(s).value();
      complex predicted = std::sqrt(img.at(c.x, c.y) / total);
      complex neighbours = 0.0;
      for (int j = 0; j < layout.num_qubits(); ++j) {
        const auto p = layout.index_to_coord(s ^ (std::uint64_t{1} << j)).value();
        neighbours += std::sqrt(img.at(p.x, p.y) / total);
      }
      predicted += complex(0, -theta / 2) * neighbours;
      worst = std::max(worst, std::abs(amps[s] - predicted));
    }
    return worst;
  };
  const double r1 = residual(1e-3);
  const double r2 = residual(5e-4);
  EXPECT_LT(r1, 36 * 1e-6);
  EXPECT_NEAR(r1 / r2, 4.0, 0.5);
}

TEST(RyBlur, white_image_collapses_to_all_ones) {
  const Image white(8, 8, 1.0);
  const auto p = ry_blur(encode(white), AngleSchedule::uniform(white.layout(), pi / 2)).probabilities();
  EXPECT_NEAR(p.back(), 1.0, 1e-12);
}

TEST(RyBlur, zero_is_identity_and_matches_gate_by_gate) {
  const auto img = testutil::random_image(8, 16, 6);
  const auto encoded = encode(img);
  EXPECT_EQ(decode(ry_blur(encoded, AngleSchedule::uniform(img.layout(), 0.0))), decode(encoded));

  auto manual = std::get<Statevector>(encoded.state);
  for (int q = 0; q < img.layout().num_qubits(); ++q) apply_gate(manual, Gate::ry(q, 0.05));
  const auto blurred = ry_blur(encoded, AngleSchedule::uniform(img.layout(), 0.05));
  EXPECT_LE(testutil::max_abs_diff(probabilities(manual), blurred.probabilities()), 1e-15);
}

TEST(Incoherent, quarter_turn_mixes_evenly) {
  const auto img = testutil::random_image(16, 8, 10);
  const auto out = incoherent_blur(img, AngleSchedule::uniform(img.layout(), pi / 2));
  for (double v : out.values()) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_LE(asymmetry(out), 1e-12);
  EXPECT_LE(image_detail(out), 1e-12);
  EXPECT_LE(state_detail(out), 1e-12);
}

TEST(Incoherent, half_and_full_turns) {
  const auto img = testutil::random_image(16, 16, 13).rescaled_to_max();
  EXPECT_EQ(incoherent_blur(img, AngleSchedule::uniform(img.layout(), pi)), flip_all(img));
  EXPECT_LE(testutil::max_abs_diff(incoherent_blur(img, AngleSchedule::uniform(img.layout(), 2 * pi)), img),
            1e-12);
}

TEST(Incoherent, matches_flip_pattern_oracle) {
  std::mt19937_64 rng(3);
  for (auto [w, h] : {std::pair{16u, 16u}, {8u, 4u}, {5u, 6u}}) {
    const auto img = testutil::random_image(w, h, w * 31 + h);
    std::vector<double> angles(img.layout().num_qubits());
    for (double& a : angles) a = testutil::unit(rng) * 2 * pi;
    const AngleSchedule schedule(img.layout(), angles);
    if (std::has_single_bit(w) && std::has_single_bit(h)) {
      EXPECT_LE(testutil::max_abs_diff(incoherent_mixture(img, schedule), mixture_oracle(img, schedule)),
                1e-10);
    }
    // Order of the per-level mixes does not matter.
    auto order = img.layout().levels();
    std::shuffle(order.begin(), order.end(), rng);
    Image stepwise = img;
    for (const auto& level : order) {
      const int q = img.layout().qubit(level);
      // Single-level mixing on the cropped image only equals the padded
      // computation when no mass leaves the frame.
      stepwise = incoherent_mixture(stepwise, single_level(img.layout(), q, angles[q]));
    }
    if (std::has_single_bit(w) && std::has_single_bit(h)) {
      EXPECT_LE(testutil::max_abs_diff(stepwise, incoherent_mixture(img, schedule)), 1e-12);
    }
  }
}

TEST(Incoherent, periodic_and_mirror_symmetric_in_angle) {
  const auto img = testutil::random_image(8, 8, 14);
  const auto layout = img.layout();
  for (double theta : {0.3, 1.1, 2.5}) {
    const auto a = incoherent_mixture(img, AngleSchedule::uniform(layout, theta));
    EXPECT_LE(testutil::max_abs_diff(a, incoherent_mixture(img, AngleSchedule::uniform(layout, theta + 2 * pi))), 1e-12);
    EXPECT_LE(testutil::max_abs_diff(a, incoherent_mixture(img, AngleSchedule::uniform(layout, 2 * pi - theta))), 1e-12);
  }
}

TEST(Incoherent, agrees_with_rx_only_at_endpoints) {
  const auto img = testutil::random_image(16, 16, 15).rescaled_to_max();
  const auto layout = img.layout();
  for (double theta : {0.0, pi}) {
    const auto coherent = decode(rx_blur(encode(img), AngleSchedule::uniform(layout, theta)));
    const auto incoherent = incoherent_blur(img, AngleSchedule::uniform(layout, theta));
    EXPECT_LE(rms_difference(coherent, incoherent), 1e-9);
  }
  const auto coherent = decode(rx_blur(encode(img), AngleSchedule::uniform(layout, pi / 2)));
  const auto incoherent = incoherent_blur(img, AngleSchedule::uniform(layout, pi / 2));
  EXPECT_GE(rms_difference(coherent, incoherent), 0.05);
}

namespace {

// Weight by direct search: flip qubit q of each pixel's string and check
// whether the partner is a 4-neighbour.
std::vector<double> brute_force_weights(const Image& img) {
  const auto layout = img.layout();
  std::vector<double> w(layout.num_qubits(), 0.0);
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      const auto s = layout.coord_to_index(x, y);
      for (int q = 0; q < layout.num_qubits(); ++q) {
        const auto partner = layout.index_to_coord(s ^ (std::uint64_t{1} << q));
        if (!partner) continue;
        const auto dx = std::max(x, partner->x) - std::min(x, partner->x);
        const auto dy = std::max(y, partner->y) - std::min(y, partner->y);
        if (dx + dy == 1) w[q] += img.at(x, y);
      }
    }
  }
  return w;
}

}  // namespace

TEST(Adaptive, weights_match_brute_force) {
  for (auto [w, h] : {std::pair{16u, 16u}, {32u, 8u}, {6u, 5u}}) {
    const auto img = testutil::random_image(w, h, w + h);
    const auto expected = brute_force_weights(img);
    const auto got = adaptive_weights(img).weights;
    for (std::size_t q = 0; q < got.size(); ++q) EXPECT_NEAR(got[q], expected[q], 1e-9);
  }
}

TEST(Adaptive, single_pixel_has_four_pertinent_qubits) {
  Image img(16, 16);
  img.at(6, 9) = 1.0;
  const auto weights = adaptive_weights(img);
  EXPECT_EQ(std::count_if(weights.weights.begin(), weights.weights.end(), [](double w) { return w > 0; }), 4);
  const auto schedule = adaptive_schedule(0.8, img.layout(), weights);
  for (std::size_t q = 0; q < weights.weights.size(); ++q) {
    EXPECT_DOUBLE_EQ(schedule.angle(static_cast<int>(q)), weights.weights[q] > 0 ? 0.8 : 0.0);
  }
}

TEST(Adaptive, corner_pixel_uses_finest_level_of_each_axis) {
  Image img(16, 16);
  img.at(0, 0) = 1.0;
  const auto layout = img.layout();
  const auto weights = adaptive_weights(img).weights;
  EXPECT_EQ(weights, brute_force_weights(img));
  for (int q = 0; q < layout.num_qubits(); ++q) {
    const bool finest = layout.level_of(q).level == 3;
    EXPECT_EQ(weights[q] > 0, finest) << "qubit " << q;
  }
}

TEST(Adaptive, uniform_image_doubles_per_level) {
  const Image img(32, 16, 1.0);
  const auto layout = img.layout();
  const auto weights = adaptive_weights(img);
  for (const auto& level : layout.levels()) {
    if (level.level == 0) continue;
    const double ratio = weights.weights[layout.qubit(level)] /
                         weights.weights[layout.qubit({level.axis, level.level - 1})];
    EXPECT_NEAR(ratio, 2.0, 1e-12);
  }
  const auto adaptive = adaptive_schedule(1.0, layout, weights);
  const auto exponential = exponential_schedule(1.0, layout);
  for (int q = 0; q < layout.num_qubits(); ++q) {
    EXPECT_NEAR(adaptive.angle(q), exponential.angle(q), 1e-12);
    const auto level = layout.level_of(q);
    EXPECT_NEAR(adaptive.angle(q), std::ldexp(1.0, -(layout.bits(level.axis) - 1 - level.level)), 1e-12);
  }
}

TEST(Adaptive, errors) {
  EXPECT_THROW(adaptive_weights(Image(8, 8, 0.0)), std::domain_error);
  const RegisterLayout layout(4, 4);
  EXPECT_THROW(adaptive_schedule(1.0, layout, QubitWeights{{0, 0, 0, 0}}), std::domain_error);
  EXPECT_THROW(adaptive_schedule(1.0, layout, QubitWeights{{1, 1}}), std::domain_error);
  const auto equal = adaptive_schedule(0.7, layout, QubitWeights{{2, 2, 2, 2}});
  for (double a : equal.angles()) EXPECT_DOUBLE_EQ(a, 0.7);
}

TEST(Exponential, schedule_values) {
  const RegisterLayout one(2, 1);
  EXPECT_EQ(exponential_schedule(0.9, one).angles(), (std::vector<double>{0.9}));
  const RegisterLayout three(8, 8);
  const auto s = exponential_schedule(1.0, three);
  EXPECT_DOUBLE_EQ(s.angle({Axis::x, 0}), 0.25);
  EXPECT_DOUBLE_EQ(s.angle({Axis::x, 1}), 0.5);
  EXPECT_DOUBLE_EQ(s.angle({Axis::x, 2}), 1.0);
  EXPECT_DOUBLE_EQ(s.angle({Axis::y, 2}), 1.0);
  EXPECT_NEAR(s.xi(), 1.0 / (2 * pi), 1e-15);
}

TEST(Exponential, approximates_adaptive_on_dense_images) {
  const auto img = testutil::random_image(128, 128, 55);
  const auto layout = img.layout();
  const auto adaptive = adaptive_schedule(1.0, layout, adaptive_weights(img));
  const auto exponential = exponential_schedule(1.0, layout);
  for (int q = 0; q < layout.num_qubits(); ++q) {
    EXPECT_LE(std::abs(exponential.angle(q) - adaptive.angle(q)), 0.25 * adaptive.angle(q));
  }
}

TEST(Schedule, validation) {
  const RegisterLayout layout(4, 4);
  EXPECT_THROW(AngleSchedule(layout, {1.0}), std::domain_error);
  EXPECT_THROW(AngleSchedule(layout, {1.0, -1.0, 0.0, 0.0}), std::domain_error);
  EXPECT_THROW(rx_blur(encode(Image(8, 8, 1.0)), AngleSchedule::uniform(layout, 0.1)), std::domain_error);
}
