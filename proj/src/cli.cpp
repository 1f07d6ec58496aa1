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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "qblur/baselines.hpp"
#include "qblur/codec.hpp"
#include "qblur/demo.hpp"
#include "qblur/effects.hpp"
#include "qblur/fixtures.hpp"
#include "qblur/harness.hpp"
#include "qblur/metrics.hpp"

namespace qblur {

namespace {

struct BlurArgs {
  std::string effect = "rx";
  double xi = 0.0;
  std::optional<int> chi;
  std::optional<std::uint64_t> shots;
  bool log_scale = false;
  std::string input;
  std::string output;
};

struct SweepArgs {
  std::vector<std::string> variants;
  std::string xi = "0:0.5:0.01";
  std::string k = "1:31:2";
  std::optional<int> chi;
  std::optional<std::uint64_t> shots;
  std::string input;
  std::string output;
};

struct TruncateArgs {
  std::string chi;
  std::string input;
  std::string outdir;
};

struct DemoArgs {
  double alpha = equal_brightness_alpha();
  std::optional<std::uint64_t> shots;
  std::string outdir;
};

struct BaselineArgs {
  std::string filter = "box";
  int k = 3;
  std::optional<double> sigma;
  std::string input;
  std::string output;
};

struct FixtureArgs {
  std::string name;
  std::uint32_t width = 128;
  std::uint32_t height = 128;
  std::string output;
};

std::string pgm_path(const std::filesystem::path& dir, const std::string& stem) {
  return (dir / (stem + ".pgm")).string();
}

int do_blur(const BlurArgs& a, std::uint64_t seed, std::ostream& out) {
  const Image image = load_pgm(a.input).rescaled_to_max();
  const double theta = 2 * std::numbers::pi * a.xi;
  const auto layout = image.layout();
  Image result;
  if (a.effect == "incoherent") {
    const Image source = a.chi ? decode(encode_truncated(image, *a.chi)) : image;
    result = incoherent_blur(source, AngleSchedule::uniform(layout, theta));
  } else {
    EncodedImage encoded = a.chi ? encode_truncated(image, *a.chi) : encode(image);
    if (a.effect == "rx") {
      encoded = rx_blur(std::move(encoded), AngleSchedule::uniform(layout, theta));
    } else if (a.effect == "ry") {
      encoded = ry_blur(std::move(encoded), AngleSchedule::uniform(layout, theta));
    } else if (a.effect == "adaptive") {
      encoded = rx_blur(std::move(encoded),
                        adaptive_schedule(theta, layout, adaptive_weights(image)));
    } else if (a.effect == "exponential") {
      encoded = rx_blur(std::move(encoded), exponential_schedule(theta, layout));
    } else {
      throw std::invalid_argument("unknown effect '" + a.effect + "'");
    }
    if (a.shots) {
      const auto counts = sample_counts(encoded.probabilities(), *a.shots, seed);
      result = a.log_scale ? decode_log(counts, layout) : decode_counts(counts, layout);
    } else {
      result = a.log_scale ? decode_log(encoded) : decode(encoded);
    }
  }
  save_pgm(result, a.output);
  out << "diff " << rms_difference(result, image) << '\n';
  return 0;
}

int do_sweep(const SweepArgs& a, std::uint64_t seed) {
  const Image image = load_pgm(a.input);
  std::vector<SweepRecord> all;
  for (const auto& name : a.variants) {
    SweepConfig config;
    config.variant = parse_variant(name);
    config.grid = parse_grid(is_classical(config.variant) ? a.k : a.xi);
    config.bond_cap = a.chi;
    config.shots = a.shots;
    config.seed = seed;
    auto records = run_sweep(image, config);
    all.insert(all.end(), records.begin(), records.end());
  }
  std::ofstream csv(a.output);
  if (!csv) throw std::runtime_error("cannot write " + a.output);
  write_csv(csv, all);
  if (!csv) throw std::runtime_error("write failed for " + a.output);
  return 0;
}

int do_truncate(const TruncateArgs& a, std::ostream& out) {
  const Image image = load_pgm(a.input).rescaled_to_max();
  std::filesystem::create_directories(a.outdir);
  for (double chi_value : parse_grid(a.chi)) {
    if (chi_value < 1 || chi_value != std::floor(chi_value)) {
      throw std::invalid_argument("bond dimensions must be positive integers");
    }
    const int chi = static_cast<int>(chi_value);
    const Image decoded = decode(encode_truncated(image, chi));
    save_pgm(decoded, pgm_path(a.outdir, "chi_" + std::to_string(chi)));
    out << "chi " << chi << " diff " << rms_difference(decoded, image) << '\n';
  }
  return 0;
}

int do_demo(const DemoArgs& a, std::uint64_t seed) {
  std::filesystem::create_directories(a.outdir);
  const auto frames = run_script(build_i_script(a.alpha));
  for (const auto& frame : frames) {
    save_pgm(frame.image, pgm_path(a.outdir, "i_step_" + frame.label));
  }
  if (a.shots) {
    const auto& final_state = frames.back().state;
    const RegisterLayout layout(32, 32);
    const auto counts = sample(final_state, *a.shots, seed);
    save_pgm(decode_counts(counts, layout), pgm_path(a.outdir, "i_sampled"));
    save_pgm(decode_log(counts, layout), pgm_path(a.outdir, "i_sampled_log"));
  }
  return 0;
}

int do_baseline(const BaselineArgs& a) {
  const Image image = load_pgm(a.input);
  Image result;
  if (a.filter == "box") {
    result = box_blur(image, a.k);
  } else if (a.filter == "gaussian") {
    result = gaussian_blur(image, a.k, a.sigma);
  } else if (a.filter == "median") {
    result = median_filter(image, a.k);
  } else {
    throw std::invalid_argument("unknown filter '" + a.filter + "'");
  }
  save_pgm(result, a.output);
  return 0;
}

int do_fixture(const FixtureArgs& a) {
  Image image;
  if (a.name == "gradient") {
    image = gradient_fixture(a.width, a.height);
  } else if (a.name == "checkerboard") {
    image = checkerboard_fixture(a.width, a.height, 8);
  } else if (a.name == "blob-scene") {
    image = blob_scene_fixture(a.width, a.height);
  } else {
    throw std::invalid_argument("unknown fixture '" + a.name + "'");
  }
  save_pgm(image, a.output);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Image blur effects on simulated quantum states"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "RNG seed for sampled decodes")->envname("QBLUR_SEED");

  BlurArgs blur;
  auto* blur_cmd = app.add_subcommand("blur", "Apply one effect to a PGM image");
  blur_cmd->add_option("--effect", blur.effect, "rx, ry, incoherent, adaptive or exponential")
      ->check(CLI::IsMember({"rx", "ry", "incoherent", "adaptive", "exponential"}));
  blur_cmd->add_option("--xi", blur.xi, "Rotation as a fraction of 2*pi")->required()
      ->check(CLI::Range(0.0, 1.0));
  blur_cmd->add_option("--chi", blur.chi, "Bond dimension cap")->check(CLI::PositiveNumber);
  blur_cmd->add_option("--shots", blur.shots, "Decode from this many samples")
      ->check(CLI::PositiveNumber);
  blur_cmd->add_flag("--log", blur.log_scale, "Log-brightness decode");
  blur_cmd->add_option("input", blur.input)->required();
  blur_cmd->add_option("output", blur.output)->required();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Write a metric sweep as CSV");
  sweep_cmd->add_option("--variant", sweep.variants, "Effect variant (repeatable)")->required()
      ->check(CLI::IsMember({"rx", "ry", "incoherent", "adaptive", "exponential", "box",
                             "gaussian", "median"}));
  sweep_cmd->add_option("--xi", sweep.xi, "xi grid: start:stop:step or a,b,c")->capture_default_str();
  sweep_cmd->add_option("--k", sweep.k, "Kernel sizes for classical variants")->capture_default_str();
  sweep_cmd->add_option("--chi", sweep.chi, "Bond dimension cap")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--shots", sweep.shots, "Decode from samples")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("input", sweep.input)->required();
  sweep_cmd->add_option("output", sweep.output)->required();

  TruncateArgs truncate;
  auto* truncate_cmd = app.add_subcommand("truncate", "Bond-limited reconstructions");
  truncate_cmd->add_option("--chi", truncate.chi, "Comma-separated bond caps")->required();
  truncate_cmd->add_option("input", truncate.input)->required();
  truncate_cmd->add_option("outdir", truncate.outdir)->required();

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo-i", "Draw the 32x32 'I' step by step");
  demo_cmd->add_option("--alpha", demo.alpha, "Middle-bar rotation angle (radians)");
  demo_cmd->add_option("--shots", demo.shots, "Also write sampled and log-scaled decodes")
      ->check(CLI::PositiveNumber);
  demo_cmd->add_option("outdir", demo.outdir)->required();

  BaselineArgs baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Conventional blur");
  baseline_cmd->add_option("--filter", baseline.filter, "box, gaussian or median")
      ->check(CLI::IsMember({"box", "gaussian", "median"}));
  baseline_cmd->add_option("--k", baseline.k, "Odd kernel size");
  baseline_cmd->add_option("--sigma", baseline.sigma, "Gaussian width");
  baseline_cmd->add_option("input", baseline.input)->required();
  baseline_cmd->add_option("output", baseline.output)->required();

  FixtureArgs fixture;
  auto* fixture_cmd = app.add_subcommand("fixture", "Write a synthetic test image");
  fixture_cmd->add_option("name", fixture.name, "gradient, checkerboard or blob-scene")
      ->required();
  fixture_cmd->add_option("--width", fixture.width);
  fixture_cmd->add_option("--height", fixture.height);
  fixture_cmd->add_option("output", fixture.output)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    if (*blur_cmd) return do_blur(blur, seed, out);
    if (*sweep_cmd) return do_sweep(sweep, seed);
    if (*truncate_cmd) return do_truncate(truncate, out);
    if (*demo_cmd) return do_demo(demo, seed);
    if (*baseline_cmd) return do_baseline(baseline);
    if (*fixture_cmd) return do_fixture(fixture);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qblur
