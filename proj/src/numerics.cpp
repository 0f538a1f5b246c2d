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

#include "ddsim/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <fftw3.h>

namespace ddsim {
namespace {

// FFTW's planner is not thread safe, execution with fftw_execute_dft is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto& slot = plans_[{n, sign}];
    if (slot == nullptr) {
      auto* buffer = fftw_alloc_complex(n);
      slot = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
      fftw_free(buffer);
      if (slot == nullptr) throw std::runtime_error("fftw plan creation failed");
    }
    return slot;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

void execute(std::size_t n, int sign, std::span<cplx> samples) {
  auto plan = PlanCache::instance().get(n, sign);
  auto* data = reinterpret_cast<fftw_complex*>(samples.data());
  fftw_execute_dft(plan, data, data);
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(double half_width, std::size_t points)
    : half_width_(half_width), points_(points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid half width must be positive, got " +
                                std::to_string(half_width));
  }
  if (!is_power_of_two(points)) {
    throw std::invalid_argument("grid size must be a power of two >= 2, got " +
                                std::to_string(points));
  }
  dx_ = 2.0 * half_width / static_cast<double>(points);
  dk_ = 2.0 * std::numbers::pi / (static_cast<double>(points) * dx_);
}

Grid make_grid(double half_width, std::size_t points) { return Grid(half_width, points); }

// psi~(k_m) = dx / sqrt(2 pi) sum_j psi(x_j) exp(-i k_m x_j)
void forward_transform(const Grid& grid, std::span<cplx> samples) {
  if (samples.size() != grid.size()) throw std::invalid_argument("sample count != grid size");
  execute(grid.size(), FFTW_FORWARD, samples);
  const double scale = grid.dx() / std::sqrt(2.0 * std::numbers::pi);
  const double x0 = grid.x(0);
  for (std::size_t m = 0; m < samples.size(); ++m) {
    samples[m] *= std::polar(scale, -grid.k(m) * x0);
  }
}

// psi(x_j) = dk / sqrt(2 pi) sum_m psi~(k_m) exp(i k_m x_j)
void inverse_transform(const Grid& grid, std::span<cplx> samples) {
  if (samples.size() != grid.size()) throw std::invalid_argument("sample count != grid size");
  const double scale = grid.dk() / std::sqrt(2.0 * std::numbers::pi);
  const double x0 = grid.x(0);
  for (std::size_t m = 0; m < samples.size(); ++m) {
    samples[m] *= std::polar(scale, grid.k(m) * x0);
  }
  execute(grid.size(), FFTW_BACKWARD, samples);
}

double EnvVector::norm_squared() const {
  return amplitudes.squaredNorm() * grid.weight(representation);
}

double EnvVector::norm() const { return std::sqrt(norm_squared()); }

cplx inner_product(const EnvVector& a, const EnvVector& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("inner product across different grids");
  if (a.representation != b.representation) {
    throw std::invalid_argument("inner product across representations");
  }
  return a.amplitudes.dot(b.amplitudes) * a.grid.weight(a.representation);
}

EnvVector to_momentum(const EnvVector& v) {
  if (v.representation != Representation::position) {
    throw std::invalid_argument("to_momentum expects a position-space vector");
  }
  EnvVector out = v;
  forward_transform(out.grid, std::span<cplx>(out.amplitudes.data(), out.amplitudes.size()));
  out.representation = Representation::momentum;
  return out;
}

EnvVector to_position(const EnvVector& v) {
  if (v.representation != Representation::momentum) {
    throw std::invalid_argument("to_position expects a momentum-space vector");
  }
  EnvVector out = v;
  inverse_transform(out.grid, std::span<cplx>(out.amplitudes.data(), out.amplitudes.size()));
  out.representation = Representation::position;
  return out;
}

EnvVector cauchy_state(const Grid& grid, double gamma, std::optional<double> cutoff,
                       Representation rep) {
  if (!(gamma > 0.0)) throw std::invalid_argument("cauchy scale gamma must be positive");
  if (cutoff && !(*cutoff > 0.0)) throw std::invalid_argument("cauchy cutoff must be positive");
  EnvVector v{grid, CVector(grid.size()), rep};
  const double half = 0.5 * gamma;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double c = grid.coordinate(rep, j);
    if (cutoff && std::abs(c) > *cutoff) {
      v.amplitudes[j] = 0.0;
      continue;
    }
    v.amplitudes[j] = std::sqrt(gamma / (2.0 * std::numbers::pi) / (c * c + half * half));
  }
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("cauchy cutoff leaves no grid points");
  v.amplitudes /= n;
  return v;
}

EnvVector gaussian_state(const Grid& grid, double center, double momentum, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  EnvVector v{grid, CVector(grid.size()), Representation::position};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double d = grid.x(j) - center;
    v.amplitudes[j] = std::polar(std::exp(-d * d / (4.0 * width * width)), momentum * grid.x(j));
  }
  v.amplitudes /= v.norm();
  return v;
}

}  // namespace ddsim
