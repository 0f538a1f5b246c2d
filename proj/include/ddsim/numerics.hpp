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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace ddsim {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;

enum class Representation { position, momentum };

/**
 * Uniform periodic discretization of L^2(R) on [-L, L).
 *
 * Position samples are x_j = -L + j dx. Momentum samples k_j follow the
 * FFT frequency layout (0, 1, ..., N/2-1, -N/2, ..., -1) scaled by
 * 2 pi / (N dx).
 *
 * Inner products carry the measure of the active representation: dx in
 * position and dk = 2 pi / (N dx) in momentum, so that sampled continuum
 * wave functions keep their continuum normalization in both pictures.
 */
class Grid {
 public:
  Grid(double half_width, std::size_t points);

  double half_width() const { return half_width_; }
  std::size_t size() const { return points_; }
  double dx() const { return dx_; }
  double dk() const { return dk_; }

  double x(std::size_t j) const { return -half_width_ + static_cast<double>(j) * dx_; }
  double k(std::size_t j) const {
    const auto n = static_cast<std::ptrdiff_t>(points_);
    auto m = static_cast<std::ptrdiff_t>(j);
    if (m >= n / 2) m -= n;
    return static_cast<double>(m) * dk_;
  }
  double coordinate(Representation rep, std::size_t j) const {
    return rep == Representation::position ? x(j) : k(j);
  }
  double weight(Representation rep) const {
    return rep == Representation::position ? dx_ : dk_;
  }

  bool operator==(const Grid& other) const {
    return points_ == other.points_ && half_width_ == other.half_width_;
  }

 private:
  double half_width_;
  std::size_t points_;
  double dx_;
  double dk_;
};

/// Validating constructor: L > 0 and N a power of two, N >= 2.
Grid make_grid(double half_width, std::size_t points);

/// In-place unitary spectral transforms on raw samples of `grid`.
void forward_transform(const Grid& grid, std::span<cplx> samples);
void inverse_transform(const Grid& grid, std::span<cplx> samples);

struct EnvVector {
  Grid grid;
  CVector amplitudes;
  Representation representation = Representation::position;

  double norm_squared() const;
  double norm() const;
};

/// <a, b> with the measure of the shared representation; conjugate-linear in a.
cplx inner_product(const EnvVector& a, const EnvVector& b);

EnvVector to_momentum(const EnvVector& v);
EnvVector to_position(const EnvVector& v);

/// amplitudes_j <- exp(i theta f(c_j)) amplitudes_j, c_j the active coordinate.
template <typename Fn>
void apply_diagonal_phase_inplace(const Grid& grid, Representation rep,
                                  std::span<cplx> samples, Fn&& f, double theta) {
  if (theta == 0.0) return;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    samples[j] *= std::polar(1.0, theta * f(grid.coordinate(rep, j)));
  }
}

template <typename Fn>
EnvVector apply_diagonal_phase(EnvVector v, Fn&& f, double theta) {
  apply_diagonal_phase_inplace(v.grid, v.representation,
                               std::span<cplx>(v.amplitudes.data(), v.amplitudes.size()),
                               std::forward<Fn>(f), theta);
  return v;
}

/**
 * Square root of the Cauchy density with scale gamma/2,
 *
 *   xi(c) = (gamma / (2 pi) / (c^2 + gamma^2 / 4))^{1/2},
 *
 * sampled in the requested representation, zeroed outside |c| <= cutoff
 * when a cutoff is given, and renormalized on the grid.
 */
EnvVector cauchy_state(const Grid& grid, double gamma, std::optional<double> cutoff,
                       Representation rep);

/// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2) + i k0 x) in position.
EnvVector gaussian_state(const Grid& grid, double center, double momentum, double width);

}  // namespace ddsim
