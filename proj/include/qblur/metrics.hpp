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

#include "qblur/image.hpp"

namespace qblur {

struct MetricsRecord {
  double diff = 0.0;
  double asymmetry = 0.0;
  double image_detail = 0.0;
  double state_detail = 0.0;
};

/// sqrt(sum (h - h')^2 / (W H)). Throws on dimension mismatch.
double rms_difference(const Image& a, const Image& b);

/// Mean rms_difference between the image and each single-level flip.
double asymmetry(const Image& image);

/// RMS over pixels of the largest |difference| to an in-bounds 4-neighbour.
double image_detail(const Image& image);

/// RMS over pixels of the largest difference to a Hamming-1 partner string.
/// Requires power-of-two dimensions (throws std::domain_error otherwise).
double state_detail(const Image& image);

/// All four measures of `image` against `original`.
MetricsRecord compute_metrics(const Image& image, const Image& original);

}  // namespace qblur
