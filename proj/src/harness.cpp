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

#include "qblur/harness.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qblur/baselines.hpp"
#include "qblur/codec.hpp"
#include "qblur/effects.hpp"

namespace qblur {

namespace {

constexpr std::pair<Variant, std::string_view> kVariantNames[] = {
    {Variant::rx, "rx"},
    {Variant::ry, "ry"},
    {Variant::incoherent, "incoherent"},
    {Variant::adaptive, "adaptive"},
    {Variant::exponential, "exponential"},
    {Variant::box, "box"},
    {Variant::gaussian, "gaussian"},
    {Variant::median, "median"},
};

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void validate(const SweepConfig& config) {
  if (config.grid.empty()) throw std::invalid_argument("sweep grid is empty");
  if (config.bond_cap && *config.bond_cap < 1) {
    throw std::invalid_argument("bond cap must be >= 1");
  }
  if (config.shots && *config.shots < 1) throw std::invalid_argument("shots must be >= 1");
  for (double g : config.grid) {
    if (is_classical(config.variant)) {
      if (g < 1 || g != std::floor(g) || static_cast<long>(g) % 2 == 0) {
        throw std::invalid_argument("kernel sizes must be odd positive integers");
      }
    } else if (!(g >= 0.0 && g <= 1.0)) {
      throw std::invalid_argument("xi values must lie in [0, 1]");
    }
  }
}

Image classical_blur(const Image& image, Variant variant, int k) {
  switch (variant) {
    case Variant::box: return box_blur(image, k);
    case Variant::gaussian: return gaussian_blur(image, k);
    case Variant::median: return median_filter(image, k);
    default: break;
  }
  throw std::logic_error("not a classical variant");
}

}  // namespace

std::string_view to_string(Variant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (const auto& [v, known] : kVariantNames) {
    if (known == name) return v;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

bool is_classical(Variant variant) {
  return variant == Variant::box || variant == Variant::gaussian || variant == Variant::median;
}

std::vector<SweepRecord> run_sweep(const Image& image, const SweepConfig& config) {
  validate(config);
  const Image original = image.rescaled_to_max();
  const int bond_dim = config.bond_cap.value_or(0);
  std::vector<SweepRecord> records(config.grid.size());

  if (is_classical(config.variant)) {
    for (std::size_t i = 0; i < config.grid.size(); ++i) {
      const int k = static_cast<int>(config.grid[i]);
      const Image blurred = classical_blur(original, config.variant, k);
      records[i] = {config.variant, config.grid[i], 0.0, 0, 0, compute_metrics(blurred, original)};
    }
    return records;
  }

  const EncodedImage base =
      config.bond_cap ? encode_truncated(original, *config.bond_cap) : encode(original);
  const auto& layout = base.layout;

  if (config.variant == Variant::incoherent) {
    const Image source = config.bond_cap ? decode(base) : original;
    for (std::size_t i = 0; i < config.grid.size(); ++i) {
      const double theta = 2 * std::numbers::pi * config.grid[i];
      const Image blurred = incoherent_blur(source, AngleSchedule::uniform(layout, theta));
      records[i] = {config.variant, config.grid[i], theta, bond_dim, 0,
                    compute_metrics(blurred, original)};
    }
    return records;
  }

  std::optional<QubitWeights> weights;
  if (config.variant == Variant::adaptive) weights = adaptive_weights(original);

  for (std::size_t i = 0; i < config.grid.size(); ++i) {
    const double theta = 2 * std::numbers::pi * config.grid[i];
    EncodedImage blurred = [&] {
      switch (config.variant) {
        case Variant::rx: return rx_blur(base, AngleSchedule::uniform(layout, theta));
        case Variant::ry: return ry_blur(base, AngleSchedule::uniform(layout, theta));
        case Variant::adaptive: return rx_blur(base, adaptive_schedule(theta, layout, *weights));
        case Variant::exponential: return rx_blur(base, exponential_schedule(theta, layout));
        default: throw std::logic_error("unhandled variant");
      }
    }();
    const Image decoded = config.shots
                              ? decode_sampled(blurred, *config.shots, config.seed + i)
                              : decode(blurred);
    records[i] = {config.variant, config.grid[i], theta, bond_dim, config.shots.value_or(0),
                  compute_metrics(decoded, original)};
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  char buffer[64];
  auto put = [&](double v) {
    std::snprintf(buffer, sizeof buffer, "%.9g", v);
    out << ',' << buffer;
  };
  for (const auto& r : records) {
    out << to_string(r.variant);
    put(r.xi);
    put(r.theta);
    out << ',' << r.bond_dim << ',' << r.shots;
    put(r.metrics.diff);
    put(r.metrics.asymmetry);
    put(r.metrics.image_detail);
    put(r.metrics.state_detail);
    out << '\n';
  }
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
      throw std::invalid_argument("range must look like start:stop:step");
    }
    const double start = parse_number(text.substr(0, first));
    const double stop = parse_number(text.substr(first + 1, second - first - 1));
    const double step = parse_number(text.substr(second + 1));
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("bad range '" + std::string(text) + "'");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    grid.push_back(parse_number(text.substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return grid;
}

}  // namespace qblur
