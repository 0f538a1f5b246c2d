// Copyright 2026 The ddsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "ddsim/models.hpp"

namespace ddsim::testing {

using Rng = std::mt19937_64;

inline QubitVector random_qubit(Rng& rng) {
  std::normal_distribution<double> normal;
  QubitVector q(cplx(normal(rng), normal(rng)), cplx(normal(rng), normal(rng)));
  return q.normalized();
}

/// Haar-like unitary from the QR factor of a complex Gaussian matrix.
inline QubitMatrix random_unitary(Rng& rng) {
  std::normal_distribution<double> normal;
  QubitMatrix z;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z(i, j) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<QubitMatrix> qr(z);
  return qr.householderQ();
}

/// Normalized superposition of a few Gaussian packets with random phases.
inline EnvVector random_env(const Grid& grid, Rng& rng, int packets = 3) {
  const double reach = 0.25 * grid.half_width();
  std::uniform_real_distribution<double> center(-reach, reach);
  std::uniform_real_distribution<double> momentum(-2.0, 2.0);
  std::uniform_real_distribution<double> width(0.5, 1.5);
  std::normal_distribution<double> normal;
  EnvVector out = gaussian_state(grid, 0.0, 0.0, 1.0);
  out.amplitudes.setZero();
  for (int i = 0; i < packets; ++i) {
    const auto g = gaussian_state(grid, center(rng), momentum(rng), width(rng));
    out.amplitudes += cplx(normal(rng), normal(rng)) * g.amplitudes;
  }
  out.amplitudes /= out.norm();
  return out;
}

inline CVector random_fock(int levels, int occupied, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v = CVector::Zero(levels);
  for (int m = 0; m < occupied; ++m) v(m) = cplx(normal(rng), normal(rng));
  return v.normalized();
}

inline SystemState random_grid_state(const Grid& grid, Rng& rng) {
  SystemState psi = SystemState::product(qubit::zero(), random_env(grid, rng));
  const auto other = random_env(grid, rng);
  const QubitVector q = random_qubit(rng);
  psi.data.row(0) *= q(0);
  psi.data.row(1) = q(1) * other.amplitudes.transpose();
  return psi;
}

inline SystemState random_fock_state(int levels, int occupied, Rng& rng) {
  SystemState psi = SystemState::product(qubit::zero(), random_fock(levels, occupied, rng));
  const QubitVector q = random_qubit(rng);
  psi.data.row(0) *= q(0);
  psi.data.row(1) = q(1) * random_fock(levels, occupied, rng).transpose();
  return psi;
}

}  // namespace ddsim::testing
