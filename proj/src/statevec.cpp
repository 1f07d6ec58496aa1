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

#include "qblur/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qblur {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::domain_error("qubit count " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

Matrix2 Gate::matrix() const {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  switch (kind) {
    case GateKind::x:
      return {complex{0, 0}, complex{1, 0}, complex{1, 0}, complex{0, 0}};
    case GateKind::y:
      return {complex{0, 0}, complex{0, -1}, complex{0, 1}, complex{0, 0}};
    case GateKind::rx:
      return {complex{c, 0}, complex{0, -s}, complex{0, -s}, complex{c, 0}};
    case GateKind::ry:
      return {complex{c, 0}, complex{-s, 0}, complex{s, 0}, complex{c, 0}};
  }
  throw std::logic_error("unknown gate kind");
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, complex{0, 0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::vector<complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  const auto size = amplitudes_.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw std::domain_error("Statevector: size must be a power of two >= 2");
  }
  num_qubits_ = std::countr_zero(size);
  check_qubit_count(num_qubits_);
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void Statevector::normalize_if_drifted(double tolerance) {
  const double n2 = norm_squared();
  if (std::abs(1.0 - n2) <= tolerance || n2 == 0.0) return;
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes_) a *= scale;
}

Statevector zero_state(int num_qubits) { return Statevector(num_qubits); }

void apply_gate(Statevector& state, const Gate& gate) {
  const int n = state.num_qubits();
  if (gate.target < 0 || gate.target >= n) {
    throw std::domain_error("apply_gate: target " + std::to_string(gate.target) +
                            " out of range");
  }
  std::uint64_t control_mask = 0;
  std::uint64_t control_want = 0;
  if (gate.control) {
    const int c = gate.control->qubit;
    if (c < 0 || c >= n || c == gate.target) {
      throw std::domain_error("apply_gate: invalid control " + std::to_string(c));
    }
    control_mask = std::uint64_t{1} << c;
    control_want = gate.control->value ? control_mask : 0;
  }

  const auto m = gate.matrix();
  auto amps = state.amplitudes();
  const std::uint64_t stride = std::uint64_t{1} << gate.target;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t block = 0; block < dim; block += 2 * stride) {
    for (std::uint64_t i0 = block; i0 < block + stride; ++i0) {
      if ((i0 & control_mask) != control_want) continue;
      const std::uint64_t i1 = i0 + stride;
      const complex a0 = amps[i0];
      const complex a1 = amps[i1];
      amps[i0] = m[0] * a0 + m[1] * a1;
      amps[i1] = m[2] * a0 + m[3] * a1;
    }
  }
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> probs(state.dimension());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(),
                 probs.begin(), [](const complex& a) { return std::norm(a); });
  return probs;
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probs,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
  if (shots == 0) throw std::domain_error("sample: shots must be >= 1");
  if (probs.empty()) throw std::domain_error("sample: empty distribution");
  std::vector<double> cumulative(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cumulative[i] = running;
  }
  if (!(running > 0.0)) throw std::domain_error("sample: zero total probability");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probs.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto index = static_cast<std::size_t>(it - cumulative.begin());
    if (it == cumulative.end()) {
      // Rounding left u past the last entry; take the last nonzero index.
      index = probs.size() - 1;
      while (probs[index] == 0.0 && index > 0) --index;
    }
    ++counts[index];
  }
  return counts;
}

std::vector<std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                  std::uint64_t seed) {
  const auto probs = probabilities(state);
  return sample_counts(probs, shots, seed);
}

double reduced_purity(const Statevector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::domain_error("reduced_purity: qubit out of range");
  }
  const auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double rho00 = 0.0;
  double rho11 = 0.0;
  complex rho01{0, 0};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    rho00 += std::norm(amps[i]);
    rho11 += std::norm(amps[i | bit]);
    rho01 += amps[i] * std::conj(amps[i | bit]);
  }
  return rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
}

}  // namespace qblur
