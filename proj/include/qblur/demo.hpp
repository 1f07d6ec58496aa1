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

#include <set>
#include <string>
#include <vector>

#include "qblur/coords.hpp"
#include "qblur/image.hpp"
#include "qblur/statevec.hpp"

namespace qblur {

/// rx angle for the middle-bar copy that leaves every lit pixel of the
/// finished "I" equally bright: sin^2(a/2) = cos^2(a/2) / 2.
double equal_brightness_alpha();

struct ScriptStep {
  std::string label;  // step letter, "b" .. "f"
  std::string note;
  std::vector<Gate> gates;
};

/// Gate sequence drawing a 32x32 striped "I" out of |0...0>.
struct CircuitScript {
  RegisterLayout layout{32, 32};
  std::vector<ScriptStep> steps;

  std::size_t gate_count() const;
  /// Copy with the named step removed.
  CircuitScript without_step(const std::string& label) const;
};

/// Labels x-j / y-j in the drawing instructions are taken as level j,
/// which is what reproduces the intended drawing (see coords: level 0 mirrors
/// the whole axis, level 4 swaps neighbours):
///   b: x on y-4, x on x-1           -> pixel moves to (15, 1)
///   c: rx(pi/2) on x-0, x-3, x-4    -> 8-wide bar
///   d: rx(pi/2) on y-3, y-0, y-2    -> bar widened and copied
///   e: rx(alpha) on y-1             -> dimmer copies in the middle
///   f: crx(pi/2), control y-1 on |0>, target x-2 -> outer bars extended
/// Throws std::domain_error unless 0 < alpha < pi.
CircuitScript build_i_script(double alpha = equal_brightness_alpha());

struct ScriptFrame {
  std::string label;  // "a" for the initial state
  Image image;
  Statevector state;
};

/// Decoded frame for the initial state and after every step.
std::vector<ScriptFrame> run_script(const CircuitScript& script);

/// Pixels a script can light, found by pushing coordinate sets through the
/// gates as classical reflections (no amplitudes, no interference).
std::set<std::pair<std::uint32_t, std::uint32_t>> support_mask(const CircuitScript& script);

}  // namespace qblur
