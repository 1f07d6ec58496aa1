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

#include "qblur/codec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qblur {

std::vector<double> EncodedImage::probabilities() const {
  return std::visit(
      [](const auto& s) -> std::vector<double> {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Statevector>) {
          return qblur::probabilities(s);
        } else {
          return to_probabilities(s);
        }
      },
      state);
}

void EncodedImage::apply(const Gate& gate) {
  std::visit(
      [&gate](auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Statevector>) {
          apply_gate(s, gate);
        } else {
          apply_1q_gate(s, gate);
        }
      },
      state);
}

EncodedImage encode(const Image& image) {
  const auto layout = image.layout();
  if (layout.num_qubits() == 0) {
    throw std::domain_error("encode: a 1x1 image needs zero qubits");
  }
  const auto values = image.values();
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(total > 0.0)) throw std::domain_error("encode: image is all zero");

  std::vector<complex> amps(layout.dimension(), complex{0, 0});
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      amps[layout.coord_to_index(x, y)] = std::sqrt(image.at(x, y) / total);
    }
  }
  return EncodedImage{layout, Statevector(std::move(amps))};
}

EncodedImage encode_truncated(const Image& image, int chi_max) {
  auto dense = encode(image);
  return EncodedImage{dense.layout,
                      from_statevector(std::get<Statevector>(dense.state), chi_max)};
}

Image decode_probabilities(std::span<const double> probs,
                           const RegisterLayout& layout) {
  if (probs.size() != layout.dimension()) {
    throw std::domain_error("decode: probability count does not match layout");
  }
  const double peak = *std::max_element(probs.begin(), probs.end());
  Image out(layout.width(), layout.height());
  if (!(peak > 0.0)) return out;
  for (std::uint32_t y = 0; y < layout.height(); ++y) {
    for (std::uint32_t x = 0; x < layout.width(); ++x) {
      out.at(x, y) = std::clamp(probs[layout.coord_to_index(x, y)] / peak, 0.0, 1.0);
    }
  }
  return out;
}

Image decode(const EncodedImage& encoded) {
  const auto probs = encoded.probabilities();
  return decode_probabilities(probs, encoded.layout);
}

namespace {

std::vector<double> frequencies(std::span<const std::uint64_t> counts) {
  const auto shots = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (shots == 0) throw std::domain_error("decode: no samples");
  std::vector<double> freq(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  return freq;
}

double smallest_nonzero(std::span<const double> probs) {
  double best = 0.0;
  for (double p : probs) {
    if (p > 0.0 && (best == 0.0 || p < best)) best = p;
  }
  return best;
}

}  // namespace

Image decode_counts(std::span<const std::uint64_t> counts,
                    const RegisterLayout& layout) {
  const auto freq = frequencies(counts);
  return decode_probabilities(freq, layout);
}

Image decode_sampled(const EncodedImage& encoded, std::uint64_t shots,
                     std::uint64_t seed) {
  const auto probs = encoded.probabilities();
  const auto counts = sample_counts(probs, shots, seed);
  return decode_counts(counts, encoded.layout);
}

Image decode_log(std::span<const double> probs, const RegisterLayout& layout,
                 double floor) {
  if (probs.size() != layout.dimension()) {
    throw std::domain_error("decode_log: probability count does not match layout");
  }
  const double peak = *std::max_element(probs.begin(), probs.end());
  if (!(peak > 0.0)) throw std::domain_error("decode_log: all probabilities are zero");
  if (!(floor > 0.0)) throw std::domain_error("decode_log: floor must be positive");
  const double log_floor = std::log(floor);
  const double span = std::log(peak) - log_floor;
  Image out(layout.width(), layout.height());
  for (std::uint32_t y = 0; y < layout.height(); ++y) {
    for (std::uint32_t x = 0; x < layout.width(); ++x) {
      const double p = probs[layout.coord_to_index(x, y)];
      if (p <= 0.0) continue;
      out.at(x, y) = span > 0.0 ? std::clamp((std::log(p) - log_floor) / span, 0.0, 1.0)
                                : 1.0;
    }
  }
  return out;
}

Image decode_log(const EncodedImage& encoded) {
  const auto probs = encoded.probabilities();
  const double floor = std::max(smallest_nonzero(probs),
                                std::ldexp(1.0, -(encoded.layout.num_qubits() + 6)));
  return decode_log(probs, encoded.layout, floor);
}

Image decode_log(std::span<const std::uint64_t> counts,
                 const RegisterLayout& layout) {
  const auto freq = frequencies(counts);
  const auto shots = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  const double floor = std::max(smallest_nonzero(freq), 1.0 / static_cast<double>(shots));
  return decode_log(freq, layout, floor);
}

}  // namespace qblur
