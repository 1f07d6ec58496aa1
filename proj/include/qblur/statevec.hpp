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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qblur {

using complex = std::complex<double>;

constexpr int kMaxQubits = 24;

enum class GateKind { x, y, rx, ry };

/// Row-major 2x2 matrix [m00, m01, m10, m11].
using Matrix2 = std::array<complex, 4>;

struct Control {
  int qubit = 0;
  /// Bit value the control must hold for the gate to act (false = |0>).
  bool value = true;
};

/// Single-qubit gate with an optional single control.
struct Gate {
  GateKind kind = GateKind::x;
  int target = 0;
  double angle = 0.0;
  std::optional<Control> control;

  static Gate x(int target) { return {GateKind::x, target, 0.0, std::nullopt}; }
  static Gate y(int target) { return {GateKind::y, target, 0.0, std::nullopt}; }
  static Gate rx(int target, double theta) { return {GateKind::rx, target, theta, std::nullopt}; }
  static Gate ry(int target, double theta) { return {GateKind::ry, target, theta, std::nullopt}; }
  static Gate crx(int control, bool control_value, int target, double theta) {
    return {GateKind::rx, target, theta, Control{control, control_value}};
  }

  /// rx = [cos t/2, -i sin t/2; -i sin t/2, cos t/2],
  /// ry = [cos t/2, -sin t/2; sin t/2, cos t/2].
  Matrix2 matrix() const;
};

/// Dense n-qubit state. Qubit q is bit q of the basis index.
class Statevector {
 public:
  /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
  explicit Statevector(int num_qubits);
  /// Takes amplitudes as given; size must be a power of two within range.
  explicit Statevector(std::vector<complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }
  std::span<const complex> amplitudes() const { return amplitudes_; }
  std::span<complex> amplitudes() { return amplitudes_; }

  double norm_squared() const;
  /// Rescales to unit norm if |1 - norm^2| exceeds `tolerance`.
  void normalize_if_drifted(double tolerance = 1e-9);

 private:
  int num_qubits_;
  std::vector<complex> amplitudes_;
};

Statevector zero_state(int num_qubits);

/// Applies the gate in place. Each amplitude pair differing only at the
/// target bit is touched once. Throws std::domain_error on bad indices.
void apply_gate(Statevector& state, const Gate& gate);

std::vector<double> probabilities(const Statevector& state);

/// Draws `shots` basis indices from `probs` and returns counts per index.
///
/// Stream: std::mt19937_64 seeded with `seed`; each draw takes one 64-bit
/// output u, forms (u >> 11) * 2^-53 in [0, 1) and picks the first index
/// whose cumulative probability exceeds it.
std::vector<std::uint64_t> sample_counts(std::span<const double> probs,
                                         std::uint64_t shots,
                                         std::uint64_t seed);
std::vector<std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                  std::uint64_t seed);

/// Tr(rho_q^2) of the single-qubit reduced state; 1 for a pure factor.
double reduced_purity(const Statevector& state, int qubit);

}  // namespace qblur
