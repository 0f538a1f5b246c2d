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

#include "ddsim/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <Eigen/Eigenvalues>

namespace ddsim::oracles {
namespace {

void require_time_and_cycles(double t, int n) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("oracle needs finite t >= 0");
  if (n < 1) throw std::domain_error("oracle needs n >= 1");
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

// Dense K x K matrix of i(a^dag^2 - a^2) = qp + pq in the number basis.
Eigen::MatrixXcd squeeze_matrix(int levels) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(levels, levels);
  for (int j = 0; j + 2 < levels; ++j) {
    const double s = std::sqrt(static_cast<double>(j + 1) * static_cast<double>(j + 2));
    m(j + 2, j) = cplx(0.0, s);
    m(j, j + 2) = cplx(0.0, -s);
  }
  return m;
}

CVector apply_hermitian_exponential(const Eigen::MatrixXcd& g, const CVector& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXcd phases =
      es.eigenvalues().unaryExpr([](double e) { return std::polar(1.0, e); });
  return es.eigenvectors() * phases.asDiagonal() * (es.eigenvectors().adjoint() * c);
}

}  // namespace

double eps_qp2(double t, int n, double gamma) {
  require_time_and_cycles(t, n);
  require_positive(gamma, "gamma");
  const double nn = static_cast<double>(n);
  return 1.0 - std::cos(t * t * t / (16.0 * nn)) * std::exp(-t * t * gamma / (4.0 * nn));
}

double eps_qp2_derived(double t, int n, double gamma) {
  require_time_and_cycles(t, n);
  require_positive(gamma, "gamma");
  const double nn = static_cast<double>(n);
  return 1.0 - std::cos(t * t * t / (8.0 * nn)) * std::exp(-t * t * gamma / (4.0 * nn));
}

double un_qp_error(double t, int n) {
  require_time_and_cycles(t, n);
  return 2.0 * std::abs(std::sin(t * t / (16.0 * static_cast<double>(n))));
}

EnvVector qp_limit_propagate(const EnvVector& v, double t) {
  if (v.representation != Representation::position) {
    throw std::invalid_argument("qp_limit_propagate expects a position-space vector");
  }
  const double alpha = 0.5 * t;
  // exp(i a (q+p)) = exp(i a q) exp(i a p) exp(i a^2 / 2)
  auto m = to_momentum(v);
  m = apply_diagonal_phase(std::move(m), [](double k) { return k; }, alpha);
  auto x = to_position(m);
  x = apply_diagonal_phase(std::move(x), [](double q) { return q; }, alpha);
  x.amplitudes *= std::polar(1.0, 0.5 * alpha * alpha);
  return x;
}

double f_q2p2(double tau) {
  if (!(tau >= 0.0) || !(tau < 2.0)) throw std::domain_error("f_q2p2 needs 0 <= tau < 2");
  if (tau < 1e-4) return 1.0 + tau * tau / 6.0;
  const double root = std::sqrt(4.0 - tau * tau);
  const double omega = std::atan2(tau * root, 2.0 - tau * tau);
  return 2.0 * omega / (tau * root);
}

Q2P2Generator un_q2p2_generator(double t, int n) {
  require_time_and_cycles(t, n);
  if (!(static_cast<double>(n) > t)) throw std::domain_error("q2p2 closed form needs n > t");
  Q2P2Generator g;
  g.oscillator = 0.5 * t * f_q2p2(t / static_cast<double>(n));
  g.squeeze = g.oscillator * t / (2.0 * static_cast<double>(n));
  return g;
}

HermiteBasis::HermiteBasis(const Grid& grid, int levels) : grid_(grid) {
  if (levels < 1) throw std::invalid_argument("Hermite basis needs at least one level");
  const auto n = static_cast<Eigen::Index>(grid.size());
  functions_.resize(n, levels);
  const double h0_norm = std::pow(std::numbers::pi, -0.25);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double x = grid.x(static_cast<std::size_t>(j));
    double prev = 0.0;
    double cur = h0_norm * std::exp(-0.5 * x * x);
    functions_(j, 0) = cur;
    for (int m = 0; m + 1 < levels; ++m) {
      const double next = std::sqrt(2.0 / (m + 1.0)) * x * cur - std::sqrt(m / (m + 1.0)) * prev;
      prev = cur;
      cur = next;
      functions_(j, m + 1) = cur;
    }
  }
}

CVector HermiteBasis::project(const EnvVector& v) const {
  if (!(v.grid == grid_)) throw std::invalid_argument("Hermite basis grid mismatch");
  const EnvVector x = v.representation == Representation::position ? v : to_position(v);
  return functions_.cast<cplx>().transpose() * x.amplitudes * grid_.dx();
}

EnvVector HermiteBasis::synthesize(const CVector& coefficients) const {
  if (coefficients.size() != functions_.cols()) throw std::invalid_argument("coefficient count mismatch");
  return {grid_, functions_.cast<cplx>() * coefficients, Representation::position};
}

SystemState apply_q2p2_generator(const Q2P2Generator& gen, const SystemState& psi,
                                 const HermiteBasis& basis) {
  if (psi.backend != Backend::grid || !psi.grid || !(*psi.grid == basis.grid())) {
    throw std::invalid_argument("apply_q2p2_generator needs a grid state on the basis grid");
  }
  const int k = basis.levels();
  Eigen::MatrixXcd number = Eigen::MatrixXcd::Zero(k, k);
  for (int m = 0; m < k; ++m) number(m, m) = 2.0 * m + 1.0;
  const Eigen::MatrixXcd squeeze = squeeze_matrix(k);

  SystemState out = psi;
  for (int a = 0; a < 2; ++a) {
    const double z = a == 0 ? 1.0 : -1.0;
    const Eigen::MatrixXcd g = gen.oscillator * number + z * gen.squeeze * squeeze;
    const CVector c = apply_hermitian_exponential(g, basis.project(psi.block(a)));
    out.data.row(a) = basis.synthesize(c).amplitudes.transpose();
  }
  return out;
}

EnvVector oscillator_propagate(const EnvVector& v, double angle, const HermiteBasis& basis) {
  CVector c = basis.project(v);
  for (Eigen::Index m = 0; m < c.size(); ++m) {
    c(m) *= std::polar(1.0, angle * (2.0 * static_cast<double>(m) + 1.0));
  }
  return basis.synthesize(c);
}

double shallow_pocket_coherence(double t, double gamma, std::optional<double> cutoff) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("coherence oracle needs finite t >= 0");
  require_positive(gamma, "gamma");
  const double half = 0.5 * gamma;
  auto density = [half](double x) { return half / std::numbers::pi / (x * x + half * half); };
  const double omega = 2.0 * t;

  double overlap = 1.0;
  if (cutoff) {
    require_positive(*cutoff, "cutoff");
    using boost::math::quadrature::gauss_kronrod;
    const double c = *cutoff;
    const double mass = gauss_kronrod<double, 61>::integrate(density, 0.0, c, 20, 1e-14);
    const double osc = gauss_kronrod<double, 61>::integrate(
        [&](double x) { return density(x) * std::cos(omega * x); }, 0.0, c, 20, 1e-14);
    overlap = osc / mass;
  } else if (omega > 0.0) {
    boost::math::quadrature::ooura_fourier_cos<double> integrator(1e-13);
    // Even density: the full-line integral is twice the half-line one.
    overlap = 2.0 * integrator.integrate(density, omega).first;
  }
  return 0.5 * (1.0 + overlap);
}

cplx qp_rotated_cauchy_coherence(double t, double gamma) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("coherence oracle needs finite t >= 0");
  require_positive(gamma, "gamma");
  return 0.5 * std::exp(-gamma * t / std::numbers::sqrt2) * std::polar(1.0, -0.5 * t * t);
}

double phi_nt(int n, double t, double s) {
  if (n < 1) throw std::domain_error("phi_nt needs n >= 1");
  require_positive(t, "t");
  const double half_window = t / (2.0 * static_cast<double>(n));
  if (s > 0.0 || s < -0.5 * t) return 0.0;
  // Cycle windows [-t k/2n, -t (k-1)/2n), k = 1..n; s = -t/2 belongs to k = n.
  auto k = static_cast<int>(std::floor(-s / half_window)) + 1;
  if (k > n) k = n;
  const double offset = s + static_cast<double>(k) * half_window;
  const double sign = offset < 0.5 * half_window ? 1.0 : -1.0;
  return sign * std::exp(-(0.25 * t + 0.5 * s));
}

}  // namespace ddsim::oracles
