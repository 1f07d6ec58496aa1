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

#include "qblur/demo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qblur/codec.hpp"

namespace qblur {

double equal_brightness_alpha() { return 2.0 * std::atan(1.0 / std::sqrt(2.0)); }

std::size_t CircuitScript::gate_count() const {
  std::size_t total = 0;
  for (const auto& step : steps) total += step.gates.size();
  return total;
}

CircuitScript CircuitScript::without_step(const std::string& label) const {
  CircuitScript out = *this;
  std::erase_if(out.steps, [&label](const ScriptStep& s) { return s.label == label; });
  return out;
}

CircuitScript build_i_script(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) {
    throw std::domain_error("build_i_script: alpha must lie in (0, pi)");
  }
  CircuitScript script;
  const auto& layout = script.layout;
  const auto x = [&layout](int level) { return layout.qubit({Axis::x, level}); };
  const auto y = [&layout](int level) { return layout.qubit({Axis::y, level}); };
  const double half_pi = std::numbers::pi / 2;

  script.steps.push_back({"b", "x on y-4 then x-1: pixel moves to (15,1)",
                          {Gate::x(y(4)), Gate::x(x(1))}});
  script.steps.push_back({"c", "rx(pi/2) on x-0, x-3, x-4: pixel spreads to a bar",
                          {Gate::rx(x(0), half_pi), Gate::rx(x(3), half_pi),
                           Gate::rx(x(4), half_pi)}});
  script.steps.push_back({"d", "rx(pi/2) on y-3 widens the bar; y-0 and y-2 copy it",
                          {Gate::rx(y(3), half_pi), Gate::rx(y(0), half_pi),
                           Gate::rx(y(2), half_pi)}});
  script.steps.push_back({"e", "rx(alpha) on y-1 copies the bars into the middle",
                          {Gate::rx(y(1), alpha)}});
  script.steps.push_back({"f", "crx(pi/2) on x-2 where y-1 is |0>: outer bars extend",
                          {Gate::crx(y(1), false, x(2), half_pi)}});
  return script;
}

std::vector<ScriptFrame> run_script(const CircuitScript& script) {
  const RegisterLayout& layout = script.layout;
  Statevector state = zero_state(layout.num_qubits());
  std::vector<ScriptFrame> frames;
  auto snapshot = [&](const std::string& label) {
    frames.push_back({label, decode(EncodedImage{layout, state}), state});
  };
  snapshot("a");
  for (const auto& step : script.steps) {
    for (const auto& gate : step.gates) apply_gate(state, gate);
    snapshot(step.label);
  }
  return frames;
}

std::set<std::pair<std::uint32_t, std::uint32_t>> support_mask(const CircuitScript& script) {
  const RegisterLayout& layout = script.layout;
  using Pixel = std::pair<std::uint32_t, std::uint32_t>;
  const auto origin = layout.index_to_coord(0).value();
  std::set<Pixel> lit{{origin.x, origin.y}};

  for (const auto& step : script.steps) {
    for (const auto& gate : step.gates) {
      const auto level = layout.level_of(gate.target);
      const auto perm = reflection_permutation(level.level, layout.bits(level.axis));
      const double turns = std::fmod(gate.angle, 2 * std::numbers::pi);
      const bool full_flip = gate.kind == GateKind::x || gate.kind == GateKind::y ||
                             turns == std::numbers::pi;
      if (!full_flip && turns == 0.0) continue;

      std::set<Pixel> next;
      for (const auto& [px, py] : lit) {
        bool active = true;
        if (gate.control) {
          const auto index = layout.coord_to_index(px, py);
          active = ((index >> gate.control->qubit) & 1u) == (gate.control->value ? 1u : 0u);
        }
        if (!active) {
          next.insert({px, py});
          continue;
        }
        const Pixel moved = level.axis == Axis::x ? Pixel{perm[px], py} : Pixel{px, perm[py]};
        if (moved.first < layout.width() && moved.second < layout.height()) next.insert(moved);
        if (!full_flip) next.insert({px, py});
      }
      lit = std::move(next);
    }
  }
  return lit;
}

}  // namespace qblur
