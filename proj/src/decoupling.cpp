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

#include "ddsim/decoupling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <span>
#include <string>

namespace ddsim {

DecouplingSet pauli_group() {
  DecouplingSet set;
  const cplx phases[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (const auto& p : {qubit::identity(), qubit::pauli_x(), qubit::pauli_y(), qubit::pauli_z()}) {
    for (auto phase : phases) set.elements.emplace_back(phase * p);
  }
  return set;
}

DecouplingSet pauli_set() {
  return {{qubit::identity(), qubit::pauli_x(), qubit::pauli_y(), qubit::pauli_z()}, 2};
}

DecouplingSet flip_set() { return {{qubit::identity(), qubit::pauli_x()}, 2}; }

Eigen::MatrixXcd group_average(const DecouplingSet& set, const Eigen::MatrixXcd& x) {
  if (set.elements.empty()) throw std::invalid_argument("empty decoupling set");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(set.dim, set.dim);
  for (const auto& v : set.elements) acc += v * x * v.adjoint();
  return acc / static_cast<double>(set.elements.size());
}

SetVerification verify_decoupling_set(const DecouplingSet& set, double tolerance) {
  if (set.elements.empty()) throw std::invalid_argument("empty decoupling set");
  const auto d = static_cast<Eigen::Index>(set.dim);
  for (const auto& v : set.elements) {
    if (v.rows() != d || v.cols() != d) throw std::invalid_argument("decoupling element has wrong dimension");
    const double r = (v * v.adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm();
    if (r > 1e-10) {
      throw std::invalid_argument("decoupling element is not unitary (residual " + std::to_string(r) + ")");
    }
  }
  SetVerification out;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
      unit(i, j) = 1.0;
      Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(d, d);
      if (i == j) target = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
      out.residual = std::max(out.residual, (group_average(set, unit) - target).norm());
    }
  }
  out.is_decoupling = out.residual <= tolerance;
  return out;
}

DecouplingCycle::DecouplingCycle(std::vector<QubitMatrix> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw std::invalid_argument("decoupling cycle must not be empty");
  std::vector<QubitMatrix> distinct;
  std::vector<int> counts;
  for (const auto& v : sequence_) {
    const double r = (v * v.adjoint() - QubitMatrix::Identity()).norm();
    if (r > 1e-10) throw std::invalid_argument("decoupling cycle element is not unitary");
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [&](const QubitMatrix& w) { return (w - v).norm() < 1e-12; });
    if (it == distinct.end()) {
      distinct.push_back(v);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - distinct.begin())];
    }
  }
  if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end()) {
    throw std::invalid_argument("decoupling cycle must visit each element equally often");
  }
  distinct_ = distinct.size();
}

DecouplingCycle DecouplingCycle::from_set(const DecouplingSet& set, int repeats) {
  if (repeats < 1) throw std::invalid_argument("cycle repeats must be >= 1");
  if (set.dim != 2) throw std::invalid_argument("pulse engine supports qubit cycles only");
  std::vector<QubitMatrix> seq;
  for (int r = 0; r < repeats; ++r) {
    for (const auto& v : set.elements) seq.emplace_back(v);
  }
  return DecouplingCycle(std::move(seq));
}

PulseSchedule::PulseSchedule(DecouplingCycle c, double total_time, int repetitions)
    : cycle(std::move(c)), t(total_time), n(repetitions) {
  if (n < 1) throw std::invalid_argument("pulse schedule needs n >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("pulse schedule needs t >= 0");
}

SystemState evolve_pulsed(const Model& model, const PulseSchedule& schedule, const SystemState& psi0) {
  SystemState psi = psi0;
  const double theta = schedule.step();
  if (theta == 0.0) return psi;
  for (int rep = 0; rep < schedule.n; ++rep) {
    for (const auto& v : schedule.cycle.sequence()) step_inplace(model, v, theta, psi);
  }
  return psi;
}

namespace {

bool is_translation(const BlockOperator& op) {
  return op.representation == Representation::position && op.power == 1;
}

// Column of the single nonzero entry in each row of a monomial unitary.
std::array<int, 2> monomial_pattern(const QubitMatrix& v) {
  std::array<int, 2> out{};
  for (int a = 0; a < 2; ++a) {
    const double m0 = std::abs(v(a, 0));
    const double m1 = std::abs(v(a, 1));
    if (std::abs(m0 - 1.0) < 1e-12 && m1 < 1e-12) {
      out[static_cast<std::size_t>(a)] = 0;
    } else if (std::abs(m1 - 1.0) < 1e-12 && m0 < 1e-12) {
      out[static_cast<std::size_t>(a)] = 1;
    } else {
      throw std::invalid_argument("comoving engine needs monomial cycle elements");
    }
  }
  if (out[0] == out[1]) throw std::invalid_argument("cycle element is not a permutation");
  return out;
}

}  // namespace

SystemState evolve_pulsed_comoving(const Model& model, const PulseSchedule& schedule,
                                   const SystemState& psi0) {
  if (model.backend() != Backend::grid) throw std::invalid_argument("comoving engine needs a grid model");
  const Grid& grid = model.grid();
  if (psi0.backend != Backend::grid || !psi0.grid || !(*psi0.grid == grid)) {
    throw std::invalid_argument("state grid does not match model");
  }
  const std::array<BlockOperator, 2> ops{model.upper(), model.lower()};
  const bool upper_shift = is_translation(ops[0]);
  const bool lower_shift = is_translation(ops[1]);
  if (upper_shift == lower_shift) throw std::invalid_argument("comoving engine needs exactly one translation block");
  if (ops[upper_shift ? 1 : 0].representation != Representation::momentum) {
    throw std::invalid_argument("comoving engine needs the other block diagonal in momentum");
  }
  std::vector<std::array<int, 2>> patterns;
  for (const auto& v : schedule.cycle.sequence()) patterns.push_back(monomial_pattern(v));

  SystemState psi = psi0;
  const std::size_t n = grid.size();
  std::array<std::span<cplx>, 2> rows{std::span<cplx>(psi.data.row(0).data(), n),
                                      std::span<cplx>(psi.data.row(1).data(), n)};
  for (auto& r : rows) forward_transform(grid, r);

  const double theta = schedule.step();
  std::array<double, 2> kappa{0.0, 0.0};
  for (int rep = 0; rep < schedule.n; ++rep) {
    for (const auto& pattern : patterns) {
      // Monomial v: v diag(H_0, H_1) v^* = diag(H_pattern[0], H_pattern[1]).
      for (std::size_t a = 0; a < 2; ++a) {
        const BlockOperator& op = ops[static_cast<std::size_t>(pattern[a])];
        if (is_translation(op)) {
          kappa[a] += op.coefficient * theta;
        } else {
          const double shift = kappa[a];
          apply_diagonal_phase_inplace(grid, Representation::momentum, rows[a],
                                       [&](double k) { return op(k + shift); }, theta);
        }
      }
    }
  }

  for (std::size_t a = 0; a < 2; ++a) {
    inverse_transform(grid, rows[a]);
    apply_diagonal_phase_inplace(grid, Representation::position, rows[a], [](double x) { return x; },
                                 kappa[a]);
  }
  return psi;
}

SystemState evolve_free(const Model& model, double t, const SystemState& psi0) {
  return step(model, qubit::identity(), -t, psi0);
}

SystemState evolve_kicked(const Model& model, const DecouplingCycle& cycle, double pulse_interval,
                          double t, const SystemState& psi0) {
  if (!(pulse_interval > 0.0)) throw std::invalid_argument("pulse interval must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("kicked evolution needs t >= 0");
  SystemState psi = psi0;
  const auto& seq = cycle.sequence();
  // Count whole intervals with a relative guard so t = k * dt lands on a boundary.
  const auto whole = static_cast<long>(std::floor(t / pulse_interval * (1.0 + 1e-14)));
  for (long k = 0; k < whole; ++k) {
    step_inplace(model, seq[static_cast<std::size_t>(k) % seq.size()], -pulse_interval, psi);
  }
  const double rest = t - static_cast<double>(whole) * pulse_interval;
  if (rest > 1e-14 * std::max(1.0, t)) {
    step_inplace(model, seq[static_cast<std::size_t>(whole) % seq.size()], -rest, psi);
  }
  return psi;
}

std::vector<ScanPoint> convergence_scan(const Model& model, const DecouplingCycle& cycle, double t,
                                        const std::vector<int>& n_list, const SystemState& psi0,
                                        const std::optional<SystemState>& reference) {
  if (!std::is_sorted(n_list.begin(), n_list.end(), std::less_equal<>())) {
    throw std::invalid_argument("n_list must be strictly increasing");
  }
  std::vector<ScanPoint> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const auto psi_n = evolve_pulsed(model, PulseSchedule(cycle, t, n), psi0);
    const auto other = reference ? *reference : evolve_pulsed(model, PulseSchedule(cycle, t, 2 * n), psi0);
    out.push_back({n, state_distance(psi_n, other)});
  }
  return out;
}

}  // namespace ddsim
