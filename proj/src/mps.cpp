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

#include "qblur/mps.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

namespace qblur {

namespace {

constexpr double kRelativeCutoff = 1e-14;

}  // namespace

TensorState::TensorState(std::vector<SiteTensor> sites, int chi_max)
    : sites_(std::move(sites)), chi_max_(chi_max) {
  if (chi_max < 1) throw std::domain_error("TensorState: chi_max must be >= 1");
  if (sites_.empty() || sites_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::domain_error("TensorState: site count out of range");
  }
  if (sites_.front().left != 1 || sites_.back().right != 1) {
    throw std::domain_error("TensorState: boundary bonds must be 1");
  }
  for (std::size_t k = 0; k < sites_.size(); ++k) {
    const auto& s = sites_[k];
    if (s.data.size() != static_cast<std::size_t>(s.left) * 2 * s.right) {
      throw std::domain_error("TensorState: site " + std::to_string(k) +
                              " has inconsistent storage");
    }
    if (k + 1 < sites_.size() && s.right != sites_[k + 1].left) {
      throw std::domain_error("TensorState: bond mismatch after site " +
                              std::to_string(k));
    }
  }
}

std::vector<int> TensorState::bond_dimensions() const {
  std::vector<int> bonds;
  bonds.reserve(sites_.size() + 1);
  bonds.push_back(sites_.front().left);
  for (const auto& s : sites_) bonds.push_back(s.right);
  return bonds;
}

int TensorState::max_bond_dimension() const {
  const auto bonds = bond_dimensions();
  return *std::max_element(bonds.begin(), bonds.end());
}

TensorState from_statevector(const Statevector& state, int chi_max) {
  if (chi_max < 1) throw std::domain_error("from_statevector: chi_max must be >= 1");
  const int n = state.num_qubits();
  const auto amps = state.amplitudes();

  // remainder(a, j): left bond a, j indexes qubits k..n-1 (qubit k lowest).
  Eigen::MatrixXcd remainder(1, static_cast<Eigen::Index>(amps.size()));
  for (std::size_t j = 0; j < amps.size(); ++j) remainder(0, static_cast<Eigen::Index>(j)) = amps[j];
  const double total = remainder.norm();
  if (total > 0.0) remainder /= total;

  std::vector<SiteTensor> sites;
  sites.reserve(n);
  for (int k = 0; k + 1 < n; ++k) {
    const Eigen::Index left = remainder.rows();
    const Eigen::Index rest = remainder.cols() / 2;
    Eigen::MatrixXcd unfolded(left * 2, rest);
    for (Eigen::Index a = 0; a < left; ++a) {
      for (Eigen::Index j = 0; j < rest; ++j) {
        unfolded(a * 2, j) = remainder(a, 2 * j);
        unfolded(a * 2 + 1, j) = remainder(a, 2 * j + 1);
      }
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(unfolded, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double leading = sigma.size() > 0 ? sigma(0) : 0.0;
    Eigen::Index keep = std::min<Eigen::Index>(chi_max, sigma.size());
    while (keep > 1 && sigma(keep - 1) <= kRelativeCutoff * leading) --keep;
    keep = std::max<Eigen::Index>(keep, 1);

    SiteTensor site;
    site.left = static_cast<int>(left);
    site.right = static_cast<int>(keep);
    site.data.resize(static_cast<std::size_t>(left) * 2 * keep);
    const auto& u = svd.matrixU();
    for (Eigen::Index a = 0; a < left; ++a) {
      for (int bit = 0; bit < 2; ++bit) {
        for (Eigen::Index c = 0; c < keep; ++c) {
          site.at(static_cast<int>(a), bit, static_cast<int>(c)) = u(a * 2 + bit, c);
        }
      }
    }
    sites.push_back(std::move(site));

    remainder = sigma.head(keep).cast<complex>().asDiagonal() *
                svd.matrixV().leftCols(keep).adjoint();
    const double kept = remainder.norm();
    if (kept > 0.0) remainder /= kept;
  }

  SiteTensor last;
  last.left = static_cast<int>(remainder.rows());
  last.right = 1;
  last.data.resize(static_cast<std::size_t>(last.left) * 2);
  for (int a = 0; a < last.left; ++a) {
    last.at(a, 0, 0) = remainder(a, 0);
    last.at(a, 1, 0) = remainder(a, 1);
  }
  sites.push_back(std::move(last));
  return TensorState(std::move(sites), chi_max);
}

void apply_1q_gate(TensorState& state, const Gate& gate) {
  if (gate.control) {
    throw UnsupportedOperation("apply_1q_gate: controlled gates are not supported on tensor states");
  }
  if (gate.target < 0 || gate.target >= state.num_qubits()) {
    throw std::domain_error("apply_1q_gate: target out of range");
  }
  const auto m = gate.matrix();
  auto& site = state.sites()[gate.target];
  for (int l = 0; l < site.left; ++l) {
    for (int r = 0; r < site.right; ++r) {
      const complex a0 = site.at(l, 0, r);
      const complex a1 = site.at(l, 1, r);
      site.at(l, 0, r) = m[0] * a0 + m[1] * a1;
      site.at(l, 1, r) = m[2] * a0 + m[3] * a1;
    }
  }
}

std::vector<complex> to_amplitudes(const TensorState& state) {
  // partial[p * chi + c]: contraction of sites 0..k-1 with low bits p, open bond c.
  std::vector<complex> partial{complex{1, 0}};
  std::size_t prefixes = 1;
  for (const auto& site : state.sites()) {
    const std::size_t chi_in = static_cast<std::size_t>(site.left);
    const std::size_t chi_out = static_cast<std::size_t>(site.right);
    std::vector<complex> next(prefixes * 2 * chi_out, complex{0, 0});
    for (int bit = 0; bit < 2; ++bit) {
      for (std::size_t p = 0; p < prefixes; ++p) {
        const complex* row = &partial[p * chi_in];
        complex* out = &next[(p + bit * prefixes) * chi_out];
        for (std::size_t a = 0; a < chi_in; ++a) {
          const complex coeff = row[a];
          if (coeff == complex{0, 0}) continue;
          const complex* tensor_row = &site.at(static_cast<int>(a), bit, 0);
          for (std::size_t c = 0; c < chi_out; ++c) out[c] += coeff * tensor_row[c];
        }
      }
    }
    partial = std::move(next);
    prefixes *= 2;
  }
  return partial;
}

std::vector<double> to_probabilities(const TensorState& state) {
  const auto amps = to_amplitudes(state);
  std::vector<double> probs(amps.size());
  std::transform(amps.begin(), amps.end(), probs.begin(),
                 [](const complex& a) { return std::norm(a); });
  return probs;
}

Statevector to_statevector(const TensorState& state) {
  return Statevector(to_amplitudes(state));
}

}  // namespace qblur
