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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qblur/image.hpp"
#include "qblur/metrics.hpp"

namespace qblur {

enum class Variant { rx, ry, incoherent, adaptive, exponential, box, gaussian, median };

std::string_view to_string(Variant variant);
/// Throws std::invalid_argument for unknown names.
Variant parse_variant(std::string_view name);
/// True for the three conventional blurs, whose grid holds kernel sizes.
bool is_classical(Variant variant);

struct SweepConfig {
  Variant variant = Variant::rx;
  /// Fractions of a full turn (quantum variants) or odd kernel sizes.
  std::vector<double> grid;
  std::optional<int> bond_cap;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
};

/// One CSV row. For classical variants `xi` holds the kernel size and
/// `theta` is 0.
struct SweepRecord {
  Variant variant = Variant::rx;
  double xi = 0.0;
  double theta = 0.0;
  int bond_dim = 0;
  std::uint64_t shots = 0;
  MetricsRecord metrics;
};

/// Runs every grid point and measures the result against the input image
/// rescaled to max 1. Grid point i samples with seed `config.seed + i`.
/// The incoherent and classical variants are exact; `shots` is recorded as
/// 0 for them. Throws std::invalid_argument for a bad config.
std::vector<SweepRecord> run_sweep(const Image& image, const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "variant,xi,theta,bond_dim,shots,diff,asymmetry,image_detail,state_detail";

/// Header line plus one line per record, floats with 9 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// "a:b:step" (inclusive of b up to rounding), "a,b,c", or a single value.
std::vector<double> parse_grid(std::string_view text);

/// Command-line entry point; args exclude the program name.
/// Returns 0 on success, 1 on I/O or domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qblur
