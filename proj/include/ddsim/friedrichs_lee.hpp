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

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ddsim/models.hpp"

// Qubit coupled to the flat-coupling Friedrichs-Lee field. The total space
// is C (+) L^2 (+) C (+) L^2 with components (x1, xi1, x2, xi2): qubit block
// |0> carries (x1, xi1) and block |1> carries (x2, xi2). Free evolution
// couples the vacuum amplitude x1 to the one-photon function xi2.
namespace ddsim::fl {

/**
 * Cell-centered uniform time grid. Cell j covers [s_min + j ds, s_min + (j+1) ds]
 * and its sample sits at the cell midpoint, so that every window edge
 * m * ds falls on a cell boundary.
 */
class TimeGrid {
 public:
  TimeGrid(std::size_t negative_cells, std::size_t positive_cells, double ds);

  std::size_t size() const { return negative_ + positive_; }
  double ds() const { return ds_; }
  double s_min() const { return -static_cast<double>(negative_) * ds_; }
  double s_max() const { return static_cast<double>(positive_) * ds_; }
  /// Index of the first cell with s >= 0.
  std::size_t zero_cell() const { return negative_; }
  double center(std::size_t j) const { return s_min() + (static_cast<double>(j) + 0.5) * ds_; }
  /// Integer m with m * ds = t; throws std::invalid_argument otherwise.
  std::size_t cells_in(double t) const;

  bool operator==(const TimeGrid& other) const {
    return negative_ == other.negative_ && positive_ == other.positive_ && ds_ == other.ds_;
  }

 private:
  std::size_t negative_;
  std::size_t positive_;
  double ds_;
};

/// Window [-t_max - ds, positive_span] with t_max and positive_span grid multiples.
TimeGrid make_time_grid(double t_max, double ds, std::optional<double> positive_span = std::nullopt);

struct FLState {
  TimeGrid grid;
  cplx x1 = 0.0;
  CVector xi1;
  cplx x2 = 0.0;
  CVector xi2;

  double norm_squared() const;
  /// (1, 0, 0, 0).
  static FLState vacuum(const TimeGrid& grid);
};

/// int conj(a) b ds over the grid.
cplx time_inner(const TimeGrid& grid, const CVector& a, const CVector& b);

/**
 * Free evolution U_t for t >= 0, a grid multiple. xi2 is shifted by t and
 * the exponential integrals use midpoint quadrature on the cells. Throws
 * std::out_of_range if content would leave the window.
 */
FLState free_evolve(const FLState& psi, double t);

/**
 * One Pauli cycle (1, X, Y, Z) with interval tau (total time 4 tau),
 * evaluated from its closed form on states (x1, 0, 0, xi2). Throws
 * std::invalid_argument for nonzero xi1 or x2.
 */
FLState pulsed_cycle(const FLState& psi, double tau);

/// (v (x) 1) psi for a qubit matrix v.
FLState apply_qubit(const QubitMatrix& v, const FLState& psi);

/// The same cycle composed from v U_tau v^*, v = 1, X, Y, Z (v = 1 first).
FLState cycle_by_composition(const FLState& psi, double tau);

/// n cycles of total time t from the vacuum on `grid`.
FLState pulsed_evolution(const TimeGrid& grid, double t, int n);

/// phi_{n,t} read off a pulsed state: i * xi2.
CVector phi_from_state(const FLState& psi);

/// Default step t / (32 n_max): the finest quarter-cycle spans 8 cells.
double default_step(double t, int n_max);

struct ProbePoint {
  int n = 0;
  double overlap = 0.0;  // |<g, phi_{n,t}>|
};

/// |<g, phi_{n,t}>| for each n, with g sampled at the cell centers.
std::vector<ProbePoint> weak_convergence_probe(const std::vector<int>& n_list, double t,
                                               const std::function<double(double)>& g,
                                               std::optional<double> ds = std::nullopt);

struct VerdictRow {
  int n = 0;
  double amp_first = 0.0;      // |x1| after n cycles
  double norm_phi = 0.0;       // ||phi_{n,t}||
  double self_distance = 0.0;  // ||phi_{2n,t} - phi_{n,t}||
};

struct Verdict {
  double t = 0.0;
  std::vector<VerdictRow> rows;
  double max_amp_deviation = 0.0;  // max_n | |x1| - exp(-t/4) |
  double min_norm_phi_sq = 0.0;
  double min_self_distance = 0.0;

  /// |x1| = e^{-t/4} within 1e-10.
  bool amplitude_persists() const { return max_amp_deviation <= 1e-10; }
  /// ||phi||^2 at least half of 1 - e^{-t/2} for every n.
  bool norm_bounded_below() const;
  /// Self-distances stay above 0.1.
  bool self_distance_persists() const { return min_self_distance > 0.1; }
  bool decoupling_fails() const {
    return amplitude_persists() && norm_bounded_below() && self_distance_persists();
  }
};

/// Step defaults to t / (64 n_max) so that phi_{2n} is resolved as well.
Verdict decoupling_verdict(double t, const std::vector<int>& n_list,
                           std::optional<double> ds = std::nullopt);

}  // namespace ddsim::fl
