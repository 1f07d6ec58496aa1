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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qblur/statevec.hpp"

namespace qblur {

class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rank-3 site tensor, indexed (left bond, physical bit, right bond).
struct SiteTensor {
  int left = 1;
  int right = 1;
  std::vector<complex> data;

  complex& at(int l, int bit, int r) {
    return data[(static_cast<std::size_t>(l) * 2 + bit) * right + r];
  }
  const complex& at(int l, int bit, int r) const {
    return data[(static_cast<std::size_t>(l) * 2 + bit) * right + r];
  }
};

/// Matrix product state with a bond-dimension cap.
///
/// Site k carries qubit k, so site 0 is the least significant bit of the
/// basis index (the finest y level under the image register packing).
class TensorState {
 public:
  TensorState(std::vector<SiteTensor> sites, int chi_max);

  int num_qubits() const { return static_cast<int>(sites_.size()); }
  int chi_max() const { return chi_max_; }
  const std::vector<SiteTensor>& sites() const { return sites_; }
  std::vector<SiteTensor>& sites() { return sites_; }

  /// chi_0 .. chi_n; the two ends are always 1.
  std::vector<int> bond_dimensions() const;
  int max_bond_dimension() const;

 private:
  std::vector<SiteTensor> sites_;
  int chi_max_;
};

/// Left-to-right SVD sweep keeping the `chi_max` largest singular values at
/// each bond. The remainder is rescaled to unit norm after every cut, so the
/// result is normalized. Singular values below 1e-14 of the leading one are
/// dropped even without truncation.
TensorState from_statevector(const Statevector& state, int chi_max);

/// Contracts an uncontrolled gate into its site. Bond dimensions are
/// unchanged. Controlled gates throw UnsupportedOperation.
void apply_1q_gate(TensorState& state, const Gate& gate);

/// Full contraction via accumulated left partial products, O(2^n chi^2).
std::vector<complex> to_amplitudes(const TensorState& state);
std::vector<double> to_probabilities(const TensorState& state);
Statevector to_statevector(const TensorState& state);

}  // namespace qblur
