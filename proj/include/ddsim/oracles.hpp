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

#include <optional>

#include <Eigen/Dense>

#include "ddsim/models.hpp"

// Closed-form reference results for the exactly solvable models. Every
// function checks its validity domain and throws std::domain_error outside.
namespace ddsim::oracles {

// ---------------------------------------------------------------------------
// q (+) p^2 with a momentum Cauchy environment of scale gamma/2, qubit |+>,
// cycle (1, X), n cycles of two exp(i t/(2n) ...) factors.
//
// Exact reduced coherence:
//   2 rho_01 = exp(+- i t^3 / (8n)) exp(-gamma t^2 / (4n)),
// hence 2 (1 - <+|rho|+>) = 1 - cos(t^3/(8n)) exp(-gamma t^2/(4n)).

/// Published closed form 1 - cos(t^3/(16n)) exp(-t^2 gamma/(4n)).
double eps_qp2(double t, int n, double gamma);

/// Same error with the phase t^3/(8n) obtained from the exact product.
double eps_qp2_derived(double t, int n, double gamma);

// ---------------------------------------------------------------------------
// q (+) p: U_n(t) = exp(+i t^2/(8n) Z) (x) exp(i t/2 (q+p)) for cycle (1, X)
// applied right to left (the sign of the Z phase flips with the order).

/// Coefficient c in the relative block phase 2 c t^2 / n between |0> and |1>.
inline constexpr double kQpBlockPhase = 1.0 / 8.0;

/// ||U_n(t) - 1 (x) exp(i t/2 (q+p))|| = |exp(i t^2/(8n)) - 1| = 2 |sin(t^2/(16n))|.
double un_qp_error(double t, int n);

/// exp(i t/2 (q+p)) on a position-space grid vector (exact BCH splitting).
EnvVector qp_limit_propagate(const EnvVector& v, double t);

// ---------------------------------------------------------------------------
// q^2 (+) p^2

/// f(tau) = 2/(tau sqrt(4 - tau^2)) * angle with tan(angle) = tau sqrt(4-tau^2)/(2-tau^2),
/// continued through the pole at tau^2 = 2; f(0) = 1. Domain 0 <= tau < 2.
double f_q2p2(double tau);

/**
 * Exact n-cycle propagator of the (1, X) cycle with steps t/(2n):
 *
 *   U_n(t) = exp(i [ oscillator * 1 (x) (q^2 + p^2) + squeeze * Z (x) (qp + pq) ])
 *
 * where oscillator = (t/2) f(t/n) and squeeze = oscillator * t/(2n). Valid
 * for n > t/2; the published domain n > t is enforced.
 */
struct Q2P2Generator {
  double oscillator = 0.0;
  double squeeze = 0.0;
};
Q2P2Generator un_q2p2_generator(double t, int n);

/// Hermite functions h_0..h_{K-1} sampled on a grid (position representation).
class HermiteBasis {
 public:
  HermiteBasis(const Grid& grid, int levels);

  int levels() const { return static_cast<int>(functions_.cols()); }
  const Grid& grid() const { return grid_; }
  CVector project(const EnvVector& v) const;
  EnvVector synthesize(const CVector& coefficients) const;

 private:
  Grid grid_;
  Eigen::MatrixXd functions_;  // N x K
};

/// Applies exp(i G) for a q^2 (+) p^2 generator through the Hermite basis.
SystemState apply_q2p2_generator(const Q2P2Generator& gen, const SystemState& psi,
                                 const HermiteBasis& basis);

/// exp(i angle (q^2 + p^2)) through the Hermite basis.
EnvVector oscillator_propagate(const EnvVector& v, double angle, const HermiteBasis& basis);

// ---------------------------------------------------------------------------
// Shallow pocket: p_+(t) = 1/2 (1 + Re int |xi|^2 exp(-2 i t x) dx) for the
// Cauchy density of scale gamma/2, optionally truncated to |x| <= cutoff and
// renormalized. Evaluated by quadrature on the real line.
double shallow_pocket_coherence(double t, double gamma, std::optional<double> cutoff);

/// rho_01(t) of the free q (+) p model from |+> (x) exp(-i angle (q^2+p^2)) xi_C
/// at angle = pi/8: (1/2) exp(-gamma t / sqrt 2) exp(-i t^2 / 2).
cplx qp_rotated_cauchy_coherence(double t, double gamma);

// ---------------------------------------------------------------------------
// Friedrichs-Lee environment excitation after n Pauli cycles of total time t:
//
//   phi(s) = exp(-(t/4 + s/2)) sum_{k=1}^n ( chi[-tk/2n, -tk/2n + t/4n)(s)
//                                           - chi[-tk/2n + t/4n, -t(k-1)/2n)(s) )
//
// The pulsed engine produces xi_2 = -i phi for the cycle (1, X, Y, Z).
double phi_nt(int n, double t, double s);

}  // namespace ddsim::oracles
