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
#include <vector>

#include "qblur/image.hpp"

namespace qblur {

// Conventional blurs. Window size k must be odd and at most
// 2 * min(W, H) - 1. Borders reflect without repeating the edge pixel
// (dcb|abcd|cba).

/// Mean of the k x k window.
Image box_blur(const Image& image, int k);

/// Default width when none is given: 0.3 * ((k - 1) / 2 - 1) + 0.8.
double default_gaussian_sigma(int k);

/// Separable Gaussian with a normalized k-tap kernel.
Image gaussian_blur(const Image& image, int k, std::optional<double> sigma = std::nullopt);
std::vector<double> gaussian_kernel(int k, double sigma);

/// Median of the k x k window.
Image median_filter(const Image& image, int k);

/// Maps a possibly out-of-range coordinate back into [0, extent).
std::int64_t reflect_index(std::int64_t i, std::int64_t extent);

}  // namespace qblur
