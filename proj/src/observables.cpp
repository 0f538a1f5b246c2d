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

#include "ddsim/observables.hpp"

#include <cmath>

namespace ddsim {

double QubitDensity::min_eigenvalue() const {
  // Eigenvalues of the Hermitian part; closed form for 2x2.
  const QubitMatrix h = 0.5 * (rho + rho.adjoint());
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double off = std::abs(h(0, 1));
  return 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + off * off);
}

bool QubitDensity::is_valid(double tolerance) const {
  return hermiticity_residual() <= tolerance && std::abs(trace() - 1.0) <= tolerance &&
         min_eigenvalue() >= -tolerance;
}

QubitDensity reduce(const SystemState& psi) {
  QubitDensity out;
  const double w = psi.weight();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      // Eigen's dot conjugates its left operand.
      out.rho(a, b) = psi.data.row(b).dot(psi.data.row(a)) * w;
    }
  }
  return out;
}

double coherence_plus(const QubitDensity& rho) {
  const QubitVector plus = qubit::plus();
  return (plus.adjoint() * rho.rho * plus)(0, 0).real();
}

double decoupling_error(const QubitDensity& rho_t, const QubitDensity& rho_0) {
  return (rho_t.rho - rho_0.rho).squaredNorm();
}

double decoupling_infidelity(const QubitDensity& rho_t, const QubitVector& phi) {
  return 2.0 * (1.0 - (phi.adjoint() * rho_t.rho * phi)(0, 0).real());
}

QubitDensity pure_density(const QubitVector& phi) { return {phi * phi.adjoint()}; }

}  // namespace ddsim
