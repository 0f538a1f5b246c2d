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

#include <doctest.h>

#include <cmath>

#include "ddsim/decoupling.hpp"
#include "ddsim/oracles.hpp"
#include "../support/random_inputs.hpp"

using namespace ddsim;

namespace {

// Independent form: the rotation angle equals 2 arcsin(tau/2), with no branch at tau^2 = 2.
double f_arcsin(double tau) { return 4.0 * std::asin(0.5 * tau) / (tau * std::sqrt(4.0 - tau * tau)); }

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("f_q2p2 matches the arcsin form on its whole domain") {
  for (double tau : {1e-3, 0.1, 0.5, 1.0, 1.4, std::sqrt(2.0), 1.5, 1.9, 1.999}) {
    CHECK(oracles::f_q2p2(tau) == doctest::Approx(f_arcsin(tau)).epsilon(1e-12));
  }
  CHECK(oracles::f_q2p2(0.0) == 1.0);
  CHECK(oracles::f_q2p2(5e-5) == doctest::Approx(f_arcsin(5e-5)).epsilon(1e-14));
  CHECK_THROWS_AS(oracles::f_q2p2(-0.1), std::domain_error);
  CHECK_THROWS_AS(oracles::f_q2p2(2.0), std::domain_error);
}

TEST_CASE("q2p2 generator coefficients and domain") {
  const auto g = oracles::un_q2p2_generator(1.0, 4);
  CHECK(g.oscillator == doctest::Approx(0.5 * f_arcsin(0.25)));
  CHECK(g.squeeze == doctest::Approx(g.oscillator / 8.0));
  CHECK_THROWS_AS(oracles::un_q2p2_generator(2.0, 2), std::domain_error);
  CHECK_THROWS_AS(oracles::un_q2p2_generator(1.0, 0), std::domain_error);
}

TEST_CASE("qp2 closed forms") {
  CHECK(oracles::eps_qp2(0.0, 3, 1.0) == doctest::Approx(0.0));
  const double t = 2.0, gamma = 1.0;
  const int n = 4;
  CHECK(oracles::eps_qp2(t, n, gamma) == doctest::Approx(1.0 - std::cos(8.0 / 64.0) * std::exp(-4.0 / 16.0)));
  CHECK(oracles::eps_qp2_derived(t, n, gamma) == doctest::Approx(1.0 - std::cos(8.0 / 32.0) * std::exp(-4.0 / 16.0)));
  CHECK_THROWS_AS(oracles::eps_qp2(1.0, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(oracles::eps_qp2(-1.0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(oracles::eps_qp2_derived(1.0, 1, 0.0), std::domain_error);
}

TEST_CASE("qp error is the chord of the block phase") {
  for (int n : {1, 4, 64}) {
    for (double t : {0.5, 1.0, 3.0}) {
      const double chord = std::abs(std::polar(1.0, t * t / (8.0 * n)) - 1.0);
      CHECK(oracles::un_qp_error(t, n) == doctest::Approx(chord).epsilon(1e-14));
    }
  }
  CHECK(oracles::kQpBlockPhase == 0.125);
}

TEST_CASE("qp limit propagator is a one-parameter group that translates the packet") {
  const Grid g = make_grid(20.0, 1024);
  const EnvVector v = gaussian_state(g, 1.0, 0.3, 0.8);
  const auto a = oracles::qp_limit_propagate(oracles::qp_limit_propagate(v, 0.6), 1.0);
  const auto b = oracles::qp_limit_propagate(v, 1.6);
  CHECK((a.amplitudes - b.amplitudes).norm() * std::sqrt(g.dx()) < 1e-12);
  // exp(i a (q+p)) moves |psi|^2 by -a with a = t/2.
  const auto shifted = gaussian_state(g, 1.0 - 0.8, 0.3, 0.8);
  CHECK((b.amplitudes.cwiseAbs() - shifted.amplitudes.cwiseAbs()).norm() * std::sqrt(g.dx()) < 1e-12);
}

TEST_CASE("shallow pocket coherence without cutoff is exponential") {
  for (double gamma : {1.0, 4.0}) {
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
      CHECK(oracles::shallow_pocket_coherence(t, gamma, std::nullopt) ==
            doctest::Approx(0.5 * (1.0 + std::exp(-gamma * t))).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(oracles::shallow_pocket_coherence(-1.0, 4.0, std::nullopt), std::domain_error);
}

TEST_CASE("cutoff coherence matches an independent Simpson rule") {
  const double gamma = 4.0, cut = 2.0, g2 = gamma * gamma / 4.0;
  const double mass = simpson([&](double x) { return 1.0 / (x * x + g2); }, -cut, cut, 20000);
  for (double t : {0.1, 0.7, 2.0, 4.0}) {
    const double num = simpson([&](double x) { return std::cos(2.0 * t * x) / (x * x + g2); }, -cut, cut, 20000);
    CHECK(oracles::shallow_pocket_coherence(t, gamma, cut) == doctest::Approx(0.5 * (1.0 + num / mass)).epsilon(1e-10));
  }
}

TEST_CASE("rotated Cauchy coherence") {
  CHECK(std::abs(oracles::qp_rotated_cauchy_coherence(0.0, 4.0) - 0.5) < 1e-15);
  const cplx c = oracles::qp_rotated_cauchy_coherence(1.0, 4.0);
  CHECK(std::abs(c) == doctest::Approx(0.5 * std::exp(-4.0 / std::sqrt(2.0))));
  CHECK(std::arg(c) == doctest::Approx(-0.5));
}

TEST_CASE("Hermite functions are orthonormal on the grid") {
  const Grid g = make_grid(20.0, 1024);
  const oracles::HermiteBasis basis(g, 60);
  Eigen::MatrixXcd gram(60, 60);
  std::vector<EnvVector> fns;
  for (int m = 0; m < 60; ++m) fns.push_back(basis.synthesize(CVector::Unit(60, m)));
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) gram(i, j) = inner_product(fns[i], fns[j]);
  }
  CHECK((gram - Eigen::MatrixXcd::Identity(60, 60)).norm() < 1e-10);
  // h_0 is the normalized ground state.
  const auto ground = gaussian_state(g, 0.0, 0.0, std::sqrt(0.5));
  CHECK((fns[0].amplitudes - ground.amplitudes).norm() * std::sqrt(g.dx()) < 1e-12);
  CHECK_THROWS_AS(oracles::HermiteBasis(g, 0), std::invalid_argument);
}

TEST_CASE("generator without squeezing is the oscillator on both blocks") {
  const Grid g = make_grid(20.0, 1024);
  const oracles::HermiteBasis basis(g, 80);
  const EnvVector v = gaussian_state(g, 0.5, 0.2, 0.9);
  const auto psi = SystemState::product(qubit::plus(), v);
  const auto out = oracles::apply_q2p2_generator({0.4, 0.0}, psi, basis);
  const auto expected = SystemState::product(qubit::plus(), oracles::oscillator_propagate(v, 0.4, basis));
  CHECK(state_distance(out, expected) < 1e-12);
}

TEST_CASE("generator reproduces a short pulse train") {
  const Grid g = make_grid(20.0, 1024);
  const oracles::HermiteBasis basis(g, 80);
  const Model model = Model::q2p2(g);
  const auto psi0 = SystemState::product(qubit::plus(), gaussian_state(g, 0.0, 0.4, 0.8));
  const DecouplingCycle cycle({qubit::identity(), qubit::pauli_x()});
  for (int n : {2, 3}) {
    const auto pulsed = evolve_pulsed(model, PulseSchedule(cycle, 1.5, n), psi0);
    const auto ref = oracles::apply_q2p2_generator(oracles::un_q2p2_generator(1.5, n), psi0, basis);
    CHECK(state_distance(pulsed, ref) < 1e-10);
  }
}

TEST_CASE("phi_nt has norm 1 - exp(-t/2) and alternating half windows") {
  const double t = 6.0;
  const int n = 20;
  const double norm = simpson([&](double s) { return std::pow(oracles::phi_nt(n, t, s), 2); }, -t / 2.0, 0.0, 400000);
  CHECK(norm == doctest::Approx(1.0 - std::exp(-t / 2.0)).epsilon(1e-5));
  const double w = t / (2.0 * n);
  CHECK(oracles::phi_nt(n, t, -0.25 * w) < 0.0);
  CHECK(oracles::phi_nt(n, t, -0.75 * w) > 0.0);
  CHECK(oracles::phi_nt(n, t, -1.25 * w) < 0.0);
  CHECK(oracles::phi_nt(n, t, -1.75 * w) > 0.0);
  CHECK(oracles::phi_nt(n, t, 0.1) == 0.0);
  CHECK(oracles::phi_nt(n, t, -t) == 0.0);
  CHECK(std::abs(oracles::phi_nt(n, t, -0.75 * w)) == doctest::Approx(std::exp(-(t / 4.0 - 0.375 * w))));
  CHECK_THROWS_AS(oracles::phi_nt(0, t, -1.0), std::domain_error);
}
