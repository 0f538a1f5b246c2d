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

#include "ddsim/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ddsim {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::shallow_pocket: return "shallow_pocket";
    case ModelKind::qp: return "qp";
    case ModelKind::qp2: return "qp2";
    case ModelKind::q2p2: return "q2p2";
    case ModelKind::spin_boson: return "spin_boson";
  }
  return "unknown";
}

namespace qubit {
QubitMatrix identity() { return QubitMatrix::Identity(); }
QubitMatrix pauli_x() {
  QubitMatrix m;
  m << 0, 1, 1, 0;
  return m;
}
QubitMatrix pauli_y() {
  QubitMatrix m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
QubitMatrix pauli_z() {
  QubitMatrix m;
  m << 1, 0, 0, -1;
  return m;
}
QubitVector zero() { return QubitVector(1, 0); }
QubitVector one() { return QubitVector(0, 1); }
QubitVector plus() { return QubitVector(1, 1) / std::numbers::sqrt2; }
QubitVector minus() { return QubitVector(1, -1) / std::numbers::sqrt2; }
}  // namespace qubit

EnvVector SystemState::block(int a) const {
  if (!grid) throw std::logic_error("block() needs a grid-backed state");
  return EnvVector{*grid, data.row(a).transpose(), Representation::position};
}

SystemState SystemState::product(const QubitVector& qubit, const EnvVector& env) {
  const EnvVector pos =
      env.representation == Representation::position ? env : to_position(env);
  SystemState s;
  s.backend = Backend::grid;
  s.grid = pos.grid;
  s.data.resize(2, static_cast<Eigen::Index>(pos.grid.size()));
  s.data.row(0) = qubit[0] * pos.amplitudes.transpose();
  s.data.row(1) = qubit[1] * pos.amplitudes.transpose();
  return s;
}

SystemState SystemState::product(const QubitVector& qubit, const CVector& fock) {
  SystemState s;
  s.backend = Backend::fock;
  s.data.resize(2, fock.size());
  s.data.row(0) = qubit[0] * fock.transpose();
  s.data.row(1) = qubit[1] * fock.transpose();
  return s;
}

double state_distance(const SystemState& a, const SystemState& b) {
  if (a.backend != b.backend || a.data.cols() != b.data.cols()) {
    throw std::invalid_argument("state distance between incompatible states");
  }
  if (a.grid.has_value() != b.grid.has_value() || (a.grid && !(*a.grid == *b.grid))) {
    throw std::invalid_argument("state distance across different grids");
  }
  return std::sqrt((a.data - b.data).squaredNorm() * a.weight());
}

Model Model::shallow_pocket(const Grid& grid) {
  return Model(ModelKind::shallow_pocket, grid, {Representation::position, 1.0, 1},
               {Representation::position, -1.0, 1});
}

Model Model::qp(const Grid& grid) {
  return Model(ModelKind::qp, grid, {Representation::position, 1.0, 1},
               {Representation::momentum, 1.0, 1});
}

Model Model::qp2(const Grid& grid) {
  return Model(ModelKind::qp2, grid, {Representation::position, 1.0, 1},
               {Representation::momentum, 1.0, 2});
}

Model Model::q2p2(const Grid& grid) {
  return Model(ModelKind::q2p2, grid, {Representation::position, 1.0, 2},
               {Representation::momentum, 1.0, 2});
}

Model Model::spin_boson(const SpinBosonParams& params) {
  auto data = std::make_shared<SpinBosonData>();
  data->params = params;
  data->hamiltonian =
      spin_boson_hamiltonian(params.omega_c, params.omega_a, params.coupling, params.fock_levels);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(data->hamiltonian);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spin-boson diagonalization failed");
  data->eigenvalues = solver.eigenvalues();
  data->eigenvectors = solver.eigenvectors();
  Model m(ModelKind::spin_boson, std::nullopt, {}, {});
  m.spin_boson_ = std::move(data);
  return m;
}

const Grid& Model::grid() const {
  if (!grid_) throw std::logic_error("model has no spatial grid");
  return *grid_;
}

const SpinBosonParams& Model::spin_boson_params() const {
  if (!spin_boson_) throw std::logic_error("not a spin-boson model");
  return spin_boson_->params;
}
const Eigen::MatrixXcd& Model::hamiltonian() const {
  if (!spin_boson_) throw std::logic_error("not a spin-boson model");
  return spin_boson_->hamiltonian;
}
const Eigen::VectorXd& Model::eigenvalues() const {
  if (!spin_boson_) throw std::logic_error("not a spin-boson model");
  return spin_boson_->eigenvalues;
}
const Eigen::MatrixXcd& Model::eigenvectors() const {
  if (!spin_boson_) throw std::logic_error("not a spin-boson model");
  return spin_boson_->eigenvectors;
}

Eigen::MatrixXcd spin_boson_hamiltonian(double omega_c, double omega_a, double coupling,
                                        int fock_levels) {
  if (fock_levels < 2) throw std::invalid_argument("spin-boson needs at least 2 Fock levels");
  const Eigen::Index m = fock_levels;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  auto idx = [m](Eigen::Index a, Eigen::Index n) { return a * m + n; };
  for (Eigen::Index n = 0; n < m; ++n) {
    const double photons = omega_c * static_cast<double>(n);
    h(idx(0, n), idx(0, n)) = photons + 0.5 * omega_a;
    h(idx(1, n), idx(1, n)) = photons - 0.5 * omega_a;
  }
  // sigma_+ (x) a : |1, n> -> sqrt(n) |0, n-1>, and its adjoint.
  for (Eigen::Index n = 1; n < m; ++n) {
    const double amp = 0.5 * coupling * std::sqrt(static_cast<double>(n));
    h(idx(0, n - 1), idx(1, n)) = amp;
    h(idx(1, n), idx(0, n - 1)) = amp;
  }
  return h;
}

namespace {

void check_unitary(const QubitMatrix& v) {
  const double residual = (v * v.adjoint() - QubitMatrix::Identity()).norm();
  if (residual > 1e-10) {
    throw std::invalid_argument("system operator is not unitary (residual " +
                                std::to_string(residual) + ")");
  }
}

void mix_rows(const QubitMatrix& u, SystemState::Blocks& data) {
  if (u.isIdentity(0.0)) return;
  data = (u * data).eval();
}

void apply_block(const Grid& grid, const BlockOperator& op, double theta, cplx* row) {
  std::span<cplx> samples(row, grid.size());
  if (op.representation == Representation::position) {
    apply_diagonal_phase_inplace(grid, Representation::position, samples, op, theta);
    return;
  }
  forward_transform(grid, samples);
  apply_diagonal_phase_inplace(grid, Representation::momentum, samples, op, theta);
  inverse_transform(grid, samples);
}

}  // namespace

void step_inplace(const Model& model, const QubitMatrix& v, double theta, SystemState& psi) {
  if (psi.backend != model.backend()) throw std::invalid_argument("state backend does not match model");
  check_unitary(v);
  if (theta == 0.0) return;
  mix_rows(v.adjoint(), psi.data);

  if (model.backend() == Backend::grid) {
    const Grid& grid = model.grid();
    if (!psi.grid || !(*psi.grid == grid)) throw std::invalid_argument("state grid does not match model");
    apply_block(grid, model.upper(), theta, psi.data.row(0).data());
    apply_block(grid, model.lower(), theta, psi.data.row(1).data());
  } else {
    const auto m = static_cast<Eigen::Index>(model.spin_boson_params().fock_levels);
    if (psi.data.cols() != m) throw std::invalid_argument("fock state size does not match model");
    Eigen::VectorXcd flat(2 * m);
    flat.head(m) = psi.data.row(0).transpose();
    flat.tail(m) = psi.data.row(1).transpose();
    const auto& u = model.eigenvectors();
    Eigen::VectorXcd coeffs = u.adjoint() * flat;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      coeffs[i] *= std::polar(1.0, theta * model.eigenvalues()[i]);
    }
    flat = u * coeffs;
    psi.data.row(0) = flat.head(m).transpose();
    psi.data.row(1) = flat.tail(m).transpose();
  }

  mix_rows(v, psi.data);
}

SystemState step(const Model& model, const QubitMatrix& v, double theta, const SystemState& psi) {
  SystemState out = psi;
  step_inplace(model, v, theta, out);
  return out;
}

// exp(i phi (q^2+p^2)) = exp(i a q^2) exp(i b p^2) exp(i a q^2) with
// a = tan(phi)/2, b = sin(2 phi)/2; the identity holds exactly (not just up
// to sign) for |phi| < pi/2 by continuity from phi = 0.
EnvVector harmonic_rotation(const EnvVector& v, double angle) {
  if (!(std::abs(angle) < 0.5 * std::numbers::pi)) {
    throw std::invalid_argument("harmonic rotation angle must satisfy |angle| < pi/2");
  }
  EnvVector out = v.representation == Representation::position ? v : to_position(v);
  const double shear = 0.5 * std::tan(angle);
  const double kick = 0.5 * std::sin(2.0 * angle);
  std::span<cplx> samples(out.amplitudes.data(), out.amplitudes.size());
  auto square = [](double c) { return c * c; };
  apply_diagonal_phase_inplace(out.grid, Representation::position, samples, square, shear);
  forward_transform(out.grid, samples);
  apply_diagonal_phase_inplace(out.grid, Representation::momentum, samples, square, kick);
  inverse_transform(out.grid, samples);
  apply_diagonal_phase_inplace(out.grid, Representation::position, samples, square, shear);
  return out;
}

CVector coherent_fock_state(int levels, cplx alpha) {
  if (levels < 1) throw std::invalid_argument("coherent state needs at least one level");
  CVector c(levels);
  cplx term = std::exp(-0.5 * std::norm(alpha));
  for (int m = 0; m < levels; ++m) {
    c[m] = term;
    term *= alpha / std::sqrt(static_cast<double>(m + 1));
  }
  c /= c.norm();
  return c;
}

double top_levels_population(const SystemState& psi, int count) {
  if (psi.backend != Backend::fock) throw std::invalid_argument("top-level population needs a Fock state");
  const Eigen::Index m = psi.data.cols();
  const Eigen::Index k = std::min<Eigen::Index>(count, m);
  return psi.data.rightCols(k).squaredNorm();
}

SystemState initial_state(const Model& model, const QubitVector& qubit, const EnvSpec& env) {
  if (std::abs(qubit.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("qubit state is not normalized");
  }
  struct Visitor {
    const Model& model;
    const QubitVector& qubit;

    const Grid& grid() const {
      if (model.backend() != Backend::grid) {
        throw std::invalid_argument("grid environment given for a Fock model");
      }
      return model.grid();
    }
    int levels() const {
      if (model.backend() != Backend::fock) {
        throw std::invalid_argument("Fock environment given for a grid model");
      }
      return model.spin_boson_params().fock_levels;
    }

    SystemState operator()(const CauchyEnv& e) const {
      return SystemState::product(qubit, cauchy_state(grid(), e.gamma, e.cutoff, e.representation));
    }
    SystemState operator()(const RotatedCauchyEnv& e) const {
      auto xi = cauchy_state(grid(), e.gamma, std::nullopt, Representation::position);
      return SystemState::product(qubit, harmonic_rotation(xi, -e.angle));
    }
    SystemState operator()(const GaussianEnv& e) const {
      return SystemState::product(qubit, gaussian_state(grid(), e.center, e.momentum, e.width));
    }
    SystemState operator()(const FockVacuum&) const {
      CVector vac = CVector::Zero(levels());
      vac[0] = 1.0;
      return SystemState::product(qubit, vac);
    }
    SystemState operator()(const CoherentEnv& e) const {
      return SystemState::product(qubit, coherent_fock_state(levels(), e.alpha));
    }
    SystemState operator()(const EnvVector& v) const {
      if (!(v.grid == grid())) throw std::invalid_argument("environment grid does not match model");
      if (std::abs(v.norm() - 1.0) > 1e-8) throw std::invalid_argument("environment vector is not normalized");
      return SystemState::product(qubit, v);
    }
    SystemState operator()(const CVector& v) const {
      if (v.size() != levels()) throw std::invalid_argument("Fock vector size does not match model");
      if (std::abs(v.norm() - 1.0) > 1e-8) throw std::invalid_argument("Fock vector is not normalized");
      return SystemState::product(qubit, v);
    }
  };
  return std::visit(Visitor{model, qubit}, env);
}

}  // namespace ddsim
