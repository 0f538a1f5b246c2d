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

#include "ddsim/models.hpp"

namespace ddsim {

/// Reduced 2x2 qubit state.
struct QubitDensity {
  QubitMatrix rho = QubitMatrix::Zero();

  double trace() const { return rho.trace().real(); }
  double hermiticity_residual() const { return (rho - rho.adjoint()).norm(); }
  double min_eigenvalue() const;
  /// Hermitian, unit trace and positive, all to `tolerance`.
  bool is_valid(double tolerance = 1e-10) const;
};

/// Partial trace over the environment: rho_ab = <psi_b, psi_a>.
QubitDensity reduce(const SystemState& psi);

/// <+| rho |+>.
double coherence_plus(const QubitDensity& rho);

/// Squared Hilbert-Schmidt distance ||rho_t - rho_0||_2^2.
double decoupling_error(const QubitDensity& rho_t, const QubitDensity& rho_0);

/**
 * 2 (1 - <phi|rho_t|phi>) for a pure initial qubit state phi. Equals
 * decoupling_error(rho_t, |phi><phi|) exactly when rho_t is pure; for
 * mixed rho_t the two differ by 1 - tr(rho_t^2).
 */
double decoupling_infidelity(const QubitDensity& rho_t, const QubitVector& phi);

QubitDensity pure_density(const QubitVector& phi);

}  // namespace ddsim
