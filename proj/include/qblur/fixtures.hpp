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

#include "qblur/image.hpp"

namespace qblur {

// Synthetic test scenes. All are deterministic functions of their size.

/// Diagonal ramp from 0 at the top-left to 1 at the bottom-right.
Image gradient_fixture(std::uint32_t width, std::uint32_t height);

/// Alternating 0/1 squares of side `cell`.
Image checkerboard_fixture(std::uint32_t width, std::uint32_t height, std::uint32_t cell = 1);

/// Landscape-like scene: bright sky, dark side masses, a sail, soft blobs
/// and a fine texture, with no mirror symmetry.
Image blob_scene_fixture(std::uint32_t width = 128, std::uint32_t height = 128);

}  // namespace qblur
