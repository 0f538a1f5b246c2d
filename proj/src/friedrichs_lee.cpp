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

#include "ddsim/friedrichs_lee.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ddsim::fl {
namespace {

constexpr cplx kI(0.0, 1.0);

// C[i] = int_0^{i ds} e^{u/2} xi(u) du over the positive cells (midpoint rule).
std::vector<cplx> positive_cumulative(const TimeGrid& grid, const CVector& xi) {
  const std::size_t z = grid.zero_cell();
  std::vector<cplx> c(grid.size() - z + 1, 0.0);
  for (std::size_t i = 0; z + i < grid.size(); ++i) {
    const double u = grid.center(z + i);
    c[i + 1] = c[i] + std::exp(0.5 * u) * xi(static_cast<Eigen::Index>(z + i)) * grid.ds();
  }
  return c;
}

// int_0^{center(cell)} e^{u/2} xi(u) du for a cell at or beyond s = 0.
cplx integral_to_center(const TimeGrid& grid, const std::vector<cplx>& c, const CVector& xi,
                        std::size_t cell) {
  const std::size_t z = grid.zero_cell();
  if (cell >= grid.size()) return c.back();
  const std::size_t i = cell - z;
  return c[i] + 0.5 * grid.ds() * std::exp(0.5 * grid.center(cell)) * xi(static_cast<Eigen::Index>(cell));
}

cplx integral_to(const std::vector<cplx>& c, std::size_t cells) {
  return c[std::min(cells, c.size() - 1)];
}

void require_shift_fits(const TimeGrid& grid, const CVector& xi, std::size_t shift) {
  if (shift > grid.zero_cell()) {
    throw std::out_of_range("evolution time exceeds the negative time window");
  }
  for (std::size_t j = 0; j < shift; ++j) {
    if (xi(static_cast<Eigen::Index>(j)) != cplx(0.0)) {
      throw std::out_of_range("xi2 support would leave the time window");
    }
  }
}

CVector shifted(const CVector& xi, std::size_t shift) {
  const auto n = xi.size();
  const auto m = static_cast<Eigen::Index>(shift);
  CVector out = CVector::Zero(n);
  if (m < n) out.head(n - m) = xi.tail(n - m);
  return out;
}

void require_grid(const FLState& psi) {
  const auto n = static_cast<Eigen::Index>(psi.grid.size());
  if (psi.xi1.size() != n || psi.xi2.size() != n) {
    throw std::invalid_argument("FLState samples do not match its time grid");
  }
}

}  // namespace

TimeGrid::TimeGrid(std::size_t negative_cells, std::size_t positive_cells, double ds)
    : negative_(negative_cells), positive_(positive_cells), ds_(ds) {
  if (!(ds > 0.0) || !std::isfinite(ds)) throw std::invalid_argument("time step must be positive");
  if (negative_cells == 0 || positive_cells == 0) {
    throw std::invalid_argument("time grid needs cells on both sides of s = 0");
  }
}

std::size_t TimeGrid::cells_in(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("time must be finite and >= 0");
  const double ratio = t / ds_;
  const double m = std::round(ratio);
  if (std::abs(ratio - m) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument("time " + std::to_string(t) + " is not a multiple of the step " +
                                std::to_string(ds_));
  }
  return static_cast<std::size_t>(m);
}

TimeGrid make_time_grid(double t_max, double ds, std::optional<double> positive_span) {
  if (!(ds > 0.0)) throw std::invalid_argument("time step must be positive");
  const TimeGrid probe(1, 1, ds);
  const std::size_t negative = probe.cells_in(t_max) + 1;
  const std::size_t positive = positive_span ? probe.cells_in(*positive_span) : 1;
  return TimeGrid(negative, positive, ds);
}

double FLState::norm_squared() const {
  return std::norm(x1) + std::norm(x2) + (xi1.squaredNorm() + xi2.squaredNorm()) * grid.ds();
}

FLState FLState::vacuum(const TimeGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  return {grid, 1.0, CVector::Zero(n), 0.0, CVector::Zero(n)};
}

cplx time_inner(const TimeGrid& grid, const CVector& a, const CVector& b) {
  if (a.size() != b.size() || a.size() != static_cast<Eigen::Index>(grid.size())) {
    throw std::invalid_argument("time_inner size mismatch");
  }
  return a.dot(b) * grid.ds();
}

FLState free_evolve(const FLState& psi, double t) {
  require_grid(psi);
  const TimeGrid& g = psi.grid;
  const std::size_t m = g.cells_in(t);
  if (m == 0) return psi;
  require_shift_fits(g, psi.xi2, m);

  const std::size_t z = g.zero_cell();
  const auto c = positive_cumulative(g, psi.xi2);
  FLState out = psi;
  out.x1 = std::exp(-0.5 * t) * (psi.x1 - kI * integral_to(c, m));
  out.xi2 = shifted(psi.xi2, m);
  for (std::size_t j = z - m; j < z; ++j) {
    const double e = std::exp(-0.5 * (t + g.center(j)));
    const cplx integral = integral_to_center(g, c, psi.xi2, j + m);
    out.xi2(static_cast<Eigen::Index>(j)) += -kI * e * psi.x1 - e * integral;
  }
  return out;
}

FLState pulsed_cycle(const FLState& psi, double tau) {
  require_grid(psi);
  const double off_subspace = std::max(std::abs(psi.x2), psi.xi1.cwiseAbs().maxCoeff());
  if (off_subspace > 1e-14) {
    throw std::invalid_argument("pulsed_cycle is implemented on states (x1, 0, 0, xi2) only");
  }
  const TimeGrid& g = psi.grid;
  const std::size_t m = g.cells_in(tau);
  if (m == 0) return psi;
  require_shift_fits(g, psi.xi2, 2 * m);

  const std::size_t z = g.zero_cell();
  const auto c = positive_cumulative(g, psi.xi2);
  const cplx first = integral_to(c, m);             // int_0^tau
  const cplx second = integral_to(c, 2 * m) - first;  // int_tau^{2 tau}

  FLState out = psi;
  out.x1 = std::exp(-tau) * (psi.x1 - kI * first + kI * second);
  out.xi2 = shifted(psi.xi2, 2 * m);
  for (std::size_t j = z - 2 * m; j < z; ++j) {
    const double e = std::exp(-0.5 * (2.0 * tau + g.center(j)));
    const cplx to_center = integral_to_center(g, c, psi.xi2, j + 2 * m);
    cplx& target = out.xi2(static_cast<Eigen::Index>(j));
    if (j < z - m) {
      target += -kI * e * psi.x1 - e * to_center;
    } else {
      target += kI * e * psi.x1 + e * first - e * (to_center - first);
    }
  }
  return out;
}

FLState apply_qubit(const QubitMatrix& v, const FLState& psi) {
  require_grid(psi);
  FLState out = psi;
  out.x1 = v(0, 0) * psi.x1 + v(0, 1) * psi.x2;
  out.x2 = v(1, 0) * psi.x1 + v(1, 1) * psi.x2;
  out.xi1 = v(0, 0) * psi.xi1 + v(0, 1) * psi.xi2;
  out.xi2 = v(1, 0) * psi.xi1 + v(1, 1) * psi.xi2;
  return out;
}

FLState cycle_by_composition(const FLState& psi, double tau) {
  FLState out = psi;
  for (const auto& v : {qubit::identity(), qubit::pauli_x(), qubit::pauli_y(), qubit::pauli_z()}) {
    out = apply_qubit(v, free_evolve(apply_qubit(v.adjoint(), out), tau));
  }
  return out;
}

FLState pulsed_evolution(const TimeGrid& grid, double t, int n) {
  if (n < 1) throw std::invalid_argument("pulsed evolution needs n >= 1");
  const double tau = t / (4.0 * static_cast<double>(n));
  FLState psi = FLState::vacuum(grid);
  for (int k = 0; k < n; ++k) psi = pulsed_cycle(psi, tau);
  return psi;
}

CVector phi_from_state(const FLState& psi) { return kI * psi.xi2; }

double default_step(double t, int n_max) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  return t / (32.0 * static_cast<double>(n_max));
}

std::vector<ProbePoint> weak_convergence_probe(const std::vector<int>& n_list, double t,
                                               const std::function<double(double)>& g,
                                               std::optional<double> ds) {
  if (n_list.empty()) return {};
  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  const TimeGrid grid = make_time_grid(t, ds.value_or(default_step(t, n_max)));
  CVector samples(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) samples(static_cast<Eigen::Index>(j)) = g(grid.center(j));

  std::vector<ProbePoint> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const CVector phi = phi_from_state(pulsed_evolution(grid, t, n));
    out.push_back({n, std::abs(time_inner(grid, samples, phi))});
  }
  return out;
}

bool Verdict::norm_bounded_below() const { return min_norm_phi_sq >= 0.5 * (1.0 - std::exp(-0.5 * t)); }

Verdict decoupling_verdict(double t, const std::vector<int>& n_list, std::optional<double> ds) {
  if (n_list.empty()) throw std::invalid_argument("verdict needs at least one n");
  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  const TimeGrid grid = make_time_grid(t, ds.value_or(0.5 * default_step(t, n_max)));

  Verdict v;
  v.t = t;
  v.min_norm_phi_sq = INFINITY;
  v.min_self_distance = INFINITY;
  const double expected = std::exp(-0.25 * t);
  for (int n : n_list) {
    const FLState psi_n = pulsed_evolution(grid, t, n);
    const CVector phi_n = phi_from_state(psi_n);
    const CVector phi_2n = phi_from_state(pulsed_evolution(grid, t, 2 * n));
    VerdictRow row;
    row.n = n;
    row.amp_first = std::abs(psi_n.x1);
    row.norm_phi = std::sqrt(time_inner(grid, phi_n, phi_n).real());
    row.self_distance = std::sqrt((phi_2n - phi_n).squaredNorm() * grid.ds());
    v.max_amp_deviation = std::max(v.max_amp_deviation, std::abs(row.amp_first - expected));
    v.min_norm_phi_sq = std::min(v.min_norm_phi_sq, row.norm_phi * row.norm_phi);
    v.min_self_distance = std::min(v.min_self_distance, row.self_distance);
    v.rows.push_back(row);
  }
  return v;
}

}  // namespace ddsim::fl
