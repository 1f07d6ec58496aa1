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

#include <vector>

#include "qblur/codec.hpp"
#include "qblur/coords.hpp"
#include "qblur/image.hpp"

namespace qblur {

/// Rotation angle per qubit, in radians, indexed by qubit number.
class AngleSchedule {
 public:
  AngleSchedule(RegisterLayout layout, std::vector<double> angles);

  /// The same angle on every qubit.
  static AngleSchedule uniform(const RegisterLayout& layout, double theta);

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<double>& angles() const { return angles_; }
  double angle(int qubit) const { return angles_.at(qubit); }
  double angle(BitLevel level) const { return angles_.at(layout_.qubit(level)); }
  /// Largest angle as a fraction of a full 2*pi turn.
  double xi() const;

 private:
  RegisterLayout layout_;
  std::vector<double> angles_;
};

/// Nonnegative per-qubit weights, indexed by qubit number.
struct QubitWeights {
  std::vector<double> weights;

  double max() const;
};

EncodedImage rx_blur(EncodedImage encoded, const AngleSchedule& schedule);
EncodedImage ry_blur(EncodedImage encoded, const AngleSchedule& schedule);

/// Mixes the image with its reflections, level by level:
/// h <- (1 - p) h + p flip(h), p = sin^2(theta / 2). Works on the padded
/// power-of-two grid and crops at the end. Not rescaled.
Image incoherent_mixture(const Image& image, const AngleSchedule& schedule);
/// incoherent_mixture rescaled so the maximum is 1.
Image incoherent_blur(const Image& image, const AngleSchedule& schedule);

/// w_q = sum of h(x, y) over pixels whose qubit-q flip lands on one of
/// their 4-neighbours. Throws std::domain_error if every weight is zero.
QubitWeights adaptive_weights(const Image& image);

/// theta_q = theta * w_q / max w.
AngleSchedule adaptive_schedule(double theta, const RegisterLayout& layout,
                                const QubitWeights& weights);

/// theta at level l of an m-bit register = theta * 2^l / 2^(m-1).
AngleSchedule exponential_schedule(double theta, const RegisterLayout& layout);

}  // namespace qblur
