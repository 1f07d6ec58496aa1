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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qblur {

AngleSchedule::AngleSchedule(RegisterLayout layout, std::vector<double> angles)
    : layout_(layout), angles_(std::move(angles)) {
  if (angles_.size() != static_cast<std::size_t>(layout_.num_qubits())) {
    throw std::domain_error("AngleSchedule: expected " +
                            std::to_string(layout_.num_qubits()) + " angles");
  }
  for (double a : angles_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw std::domain_error("AngleSchedule: angles must be finite and >= 0");
    }
  }
}

AngleSchedule AngleSchedule::uniform(const RegisterLayout& layout, double theta) {
  return AngleSchedule(layout, std::vector<double>(layout.num_qubits(), theta));
}

double AngleSchedule::xi() const {
  if (angles_.empty()) return 0.0;
  return *std::max_element(angles_.begin(), angles_.end()) / (2 * std::numbers::pi);
}

double QubitWeights::max() const {
  if (weights.empty()) return 0.0;
  return *std::max_element(weights.begin(), weights.end());
}

namespace {

EncodedImage rotate_all(EncodedImage encoded, const AngleSchedule& schedule,
                        GateKind kind) {
  if (!(schedule.layout() == encoded.layout)) {
    throw std::domain_error("blur: schedule layout does not match image");
  }
  for (int q = 0; q < encoded.layout.num_qubits(); ++q) {
    const double theta = schedule.angle(q);
    if (theta == 0.0) continue;
    encoded.apply(Gate{kind, q, theta, std::nullopt});
  }
  if (auto* dense = std::get_if<Statevector>(&encoded.state)) dense->normalize_if_drifted();
  return encoded;
}

}  // namespace

EncodedImage rx_blur(EncodedImage encoded, const AngleSchedule& schedule) {
  return rotate_all(std::move(encoded), schedule, GateKind::rx);
}

EncodedImage ry_blur(EncodedImage encoded, const AngleSchedule& schedule) {
  return rotate_all(std::move(encoded), schedule, GateKind::ry);
}

Image incoherent_mixture(const Image& image, const AngleSchedule& schedule) {
  const auto layout = image.layout();
  if (!(schedule.layout() == layout)) {
    throw std::domain_error("incoherent_blur: schedule layout does not match image");
  }
  const std::size_t pw = layout.padded_width();
  const std::size_t ph = layout.padded_height();
  std::vector<double> grid(pw * ph, 0.0);
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) grid[y * pw + x] = image.at(x, y);
  }

  std::vector<double> mixed(grid.size());
  for (const auto& level : layout.levels()) {
    const double s = std::sin(schedule.angle(level) / 2);
    const double p = s * s;
    if (p == 0.0) continue;
    const auto perm = reflection_permutation(level.level, layout.bits(level.axis));
    for (std::size_t y = 0; y < ph; ++y) {
      for (std::size_t x = 0; x < pw; ++x) {
        const std::size_t src = level.axis == Axis::x ? y * pw + perm[x] : perm[y] * pw + x;
        mixed[y * pw + x] = (1.0 - p) * grid[y * pw + x] + p * grid[src];
      }
    }
    grid.swap(mixed);
  }

  Image out(image.width(), image.height());
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      out.at(x, y) = std::clamp(grid[y * pw + x], 0.0, 1.0);
    }
  }
  return out;
}

Image incoherent_blur(const Image& image, const AngleSchedule& schedule) {
  return incoherent_mixture(image, schedule).rescaled_to_max();
}

QubitWeights adaptive_weights(const Image& image) {
  const auto layout = image.layout();
  QubitWeights result{std::vector<double>(layout.num_qubits(), 0.0)};
  for (const auto& level : layout.levels()) {
    const bool along_x = level.axis == Axis::x;
    const auto perm = reflection_permutation(level.level, layout.bits(level.axis));
    const std::uint32_t extent = along_x ? image.width() : image.height();
    double weight = 0.0;
    for (std::uint32_t c = 0; c < extent; ++c) {
      const std::uint32_t partner = perm[c];
      if (partner >= extent || (partner + 1 != c && c + 1 != partner)) continue;
      // Every pixel on this row/column reflects onto a neighbour.
      if (along_x) {
        for (std::uint32_t y = 0; y < image.height(); ++y) weight += image.at(c, y);
      } else {
        for (std::uint32_t x = 0; x < image.width(); ++x) weight += image.at(x, c);
      }
    }
    result.weights[layout.qubit(level)] = weight;
  }
  if (!(result.max() > 0.0)) {
    throw std::domain_error("adaptive_weights: no qubit moves a bright pixel onto a neighbour");
  }
  return result;
}

AngleSchedule adaptive_schedule(double theta, const RegisterLayout& layout,
                                const QubitWeights& weights) {
  if (weights.weights.size() != static_cast<std::size_t>(layout.num_qubits())) {
    throw std::domain_error("adaptive_schedule: weight count does not match layout");
  }
  const double peak = weights.max();
  if (!(peak > 0.0)) throw std::domain_error("adaptive_schedule: all weights are zero");
  std::vector<double> angles(weights.weights.size());
  for (std::size_t q = 0; q < angles.size(); ++q) {
    angles[q] = theta * weights.weights[q] / peak;
  }
  return AngleSchedule(layout, std::move(angles));
}

AngleSchedule exponential_schedule(double theta, const RegisterLayout& layout) {
  std::vector<double> angles(layout.num_qubits());
  for (const auto& level : layout.levels()) {
    const int m = layout.bits(level.axis);
    angles[layout.qubit(level)] = theta * std::ldexp(1.0, level.level - (m - 1));
  }
  return AngleSchedule(layout, std::move(angles));
}

}  // namespace qblur
