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

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qblur/coords.hpp"
#include "qblur/image.hpp"
#include "qblur/mps.hpp"
#include "qblur/statevec.hpp"

namespace qblur {

/// An image held as a quantum state, dense or bond-limited.
struct EncodedImage {
  RegisterLayout layout;
  std::variant<Statevector, TensorState> state;

  bool is_tensor() const { return std::holds_alternative<TensorState>(state); }
  /// Basis probabilities of the held state, whichever representation.
  std::vector<double> probabilities() const;
  /// Applies an uncontrolled gate; controlled gates only on dense states.
  void apply(const Gate& gate);
};

/// Amplitude sqrt(h / sum h) at each pixel's Gray index, 0 on padding.
/// Throws std::domain_error for all-zero images or a 1x1 image (no qubits).
EncodedImage encode(const Image& image);
/// encode() followed by a bond-limited tensor decomposition.
EncodedImage encode_truncated(const Image& image, int chi_max);

/// Brightness p / max p over valid pixels; the max runs over every basis
/// string, padding included.
Image decode_probabilities(std::span<const double> probs, const RegisterLayout& layout);
Image decode(const EncodedImage& encoded);

/// decode with measured frequencies in place of probabilities.
Image decode_counts(std::span<const std::uint64_t> counts, const RegisterLayout& layout);
Image decode_sampled(const EncodedImage& encoded, std::uint64_t shots,
                     std::uint64_t seed);

/// Log-scaled decode. For p > 0 the brightness is
/// (ln p - ln floor) / (ln p_max - ln floor) clamped to [0, 1]; p = 0 gives 0.
/// When p_max <= floor every nonzero pixel is 1.
Image decode_log(std::span<const double> probs, const RegisterLayout& layout,
                 double floor);
/// floor = max(smallest nonzero p, 2^-(n+6)).
Image decode_log(const EncodedImage& encoded);
/// floor = max(smallest nonzero frequency, 1/shots).
Image decode_log(std::span<const std::uint64_t> counts, const RegisterLayout& layout);

}  // namespace qblur
