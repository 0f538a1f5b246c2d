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
#include <vector>

#include <Eigen/Dense>

#include "ddsim/models.hpp"

namespace ddsim {

/// Finite set of d x d unitaries used for group averaging.
struct DecouplingSet {
  std::vector<Eigen::MatrixXcd> elements;
  int dim = 2;
};

/// {+-1, +-i} x {1, X, Y, Z}.
DecouplingSet pauli_group();
/// {1, X, Y, Z}: the Pauli group with scalar phases quotiented out.
DecouplingSet pauli_set();
/// {1, X}: sufficient for block-diagonal qubit Hamiltonians diag(A, B).
DecouplingSet flip_set();

/// (1/|V|) sum_v v x v^*.
Eigen::MatrixXcd group_average(const DecouplingSet& set, const Eigen::MatrixXcd& x);

struct SetVerification {
  bool is_decoupling = false;
  double residual = 0.0;  // worst Frobenius residual over the matrix units
};

/**
 * Checks (1/|V|) sum_v v E_ij v^* = delta_ij / d * 1 on every matrix unit
 * E_ij, which by linearity covers all of B(C^d). Throws
 * std::invalid_argument if an element is not unitary to 1e-10.
 */
SetVerification verify_decoupling_set(const DecouplingSet& set, double tolerance = 1e-12);

/**
 * Ordered pulse sequence (v_1, ..., v_N) through a set of distinct
 * unitaries, visiting each the same number of times.
 */
class DecouplingCycle {
 public:
  explicit DecouplingCycle(std::vector<QubitMatrix> sequence);

  /// `repeats` passes through the set in its stored order.
  static DecouplingCycle from_set(const DecouplingSet& set, int repeats = 1);

  const std::vector<QubitMatrix>& sequence() const { return sequence_; }
  std::size_t length() const { return sequence_.size(); }
  /// Number of distinct elements visited.
  std::size_t distinct() const { return distinct_; }

 private:
  std::vector<QubitMatrix> sequence_;
  std::size_t distinct_ = 0;
};

struct PulseSchedule {
  DecouplingCycle cycle;
  double t = 0.0;
  int n = 1;

  PulseSchedule(DecouplingCycle c, double total_time, int repetitions);
  double step() const { return t / (static_cast<double>(n) * static_cast<double>(cycle.length())); }
};

/**
 * (prod_{k=1}^N exp(i theta v_k H v_k^*))^n psi with theta = t/(nN).
 *
 * Products are applied right to left, a_N ... a_1: v_1's factor acts
 * first. Note the positive exponent; with the trivial cycle (1) this is
 * evolve_free(-t).
 */
SystemState evolve_pulsed(const Model& model, const PulseSchedule& schedule, const SystemState& psi0);

/**
 * Same product as evolve_pulsed for grid models with one block linear in
 * position (c q) and the other diagonal in momentum, and cycles of
 * monomial unitaries (each row holds one unimodular entry).
 *
 * Each block is propagated in momentum space in a frame translated by the
 * accumulated shift kappa_a, so exp(i theta c q) is an exact translation
 * kappa_a += c theta rather than a multiplication on the periodic box. The
 * result is the line dynamics up to momentum truncation, mapped back to the
 * box by multiplying with exp(i kappa_a x). Throws std::invalid_argument
 * for unsupported models or cycles.
 */
SystemState evolve_pulsed_comoving(const Model& model, const PulseSchedule& schedule,
                                   const SystemState& psi0);

/// U(t) psi0 = exp(-i t H) psi0 as a single exact step.
SystemState evolve_free(const Model& model, double t, const SystemState& psi0);

/**
 * Physical pulsed trajectory: free evolution exp(-i dt v_k H v_k^*) between
 * instantaneous kicks spaced `pulse_interval` apart, cycling through
 * `cycle`, stopped at time t (a trailing partial interval is allowed).
 */
SystemState evolve_kicked(const Model& model, const DecouplingCycle& cycle, double pulse_interval,
                          double t, const SystemState& psi0);

struct ScanPoint {
  int n = 0;
  double distance = 0.0;
};

/**
 * For each n: ||evolve_pulsed(n) - reference||, or with no reference the
 * self-distance ||psi_{2n} - psi_n||. n_list must be strictly increasing.
 */
std::vector<ScanPoint> convergence_scan(const Model& model, const DecouplingCycle& cycle, double t,
                                        const std::vector<int>& n_list, const SystemState& psi0,
                                        const std::optional<SystemState>& reference);

}  // namespace ddsim
