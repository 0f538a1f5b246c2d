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

#include <memory>
#include <optional>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "ddsim/numerics.hpp"

namespace ddsim {

using QubitMatrix = Eigen::Matrix2cd;
using QubitVector = Eigen::Vector2cd;

enum class ModelKind { shallow_pocket, qp, qp2, q2p2, spin_boson };
enum class Backend { grid, fock };

std::string_view to_string(ModelKind kind);

/// coefficient * c^power, diagonal in `representation`.
struct BlockOperator {
  Representation representation = Representation::position;
  double coefficient = 1.0;
  int power = 1;

  double operator()(double c) const {
    double value = coefficient;
    for (int i = 0; i < power; ++i) value *= c;
    return value;
  }
};

struct SpinBosonParams {
  double omega_c = 1.0;
  double omega_a = 1.0;
  double coupling = 0.2;  // Omega
  int fock_levels = 64;   // M
};

/**
 * Qubit-environment state. Row a holds the environment amplitudes paired
 * with qubit basis state |a>. Grid states are stored in position
 * representation; Fock states in the number basis.
 */
struct SystemState {
  using Blocks = Eigen::Matrix<cplx, 2, Eigen::Dynamic, Eigen::RowMajor>;

  Backend backend = Backend::grid;
  Blocks data;
  std::optional<Grid> grid;

  double weight() const { return grid ? grid->dx() : 1.0; }
  double norm_squared() const { return data.squaredNorm() * weight(); }
  double norm() const { return std::sqrt(norm_squared()); }

  EnvVector block(int a) const;  // grid backend only

  static SystemState product(const QubitVector& qubit, const EnvVector& env);
  static SystemState product(const QubitVector& qubit, const CVector& fock);
};

/// Hilbert-space norm of a - b; throws on incompatible states.
double state_distance(const SystemState& a, const SystemState& b);

/**
 * Block-diagonal grid models H = diag(A, B) on C^2 (x) L^2(R), and the
 * single-mode spin-boson model on C^2 (x) C^M.
 *
 * Spin-boson models carry the eigendecomposition of the truncated
 * Hamiltonian, computed once at construction and shared between copies.
 */
class Model {
 public:
  static Model shallow_pocket(const Grid& grid);
  static Model qp(const Grid& grid);
  static Model qp2(const Grid& grid);
  static Model q2p2(const Grid& grid);
  static Model spin_boson(const SpinBosonParams& params);

  ModelKind kind() const { return kind_; }
  Backend backend() const { return kind_ == ModelKind::spin_boson ? Backend::fock : Backend::grid; }

  const Grid& grid() const;
  const BlockOperator& upper() const { return upper_; }
  const BlockOperator& lower() const { return lower_; }

  const SpinBosonParams& spin_boson_params() const;
  const Eigen::MatrixXcd& hamiltonian() const;
  const Eigen::VectorXd& eigenvalues() const;
  const Eigen::MatrixXcd& eigenvectors() const;

 private:
  struct SpinBosonData {
    SpinBosonParams params;
    Eigen::MatrixXcd hamiltonian;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
  };

  Model(ModelKind kind, std::optional<Grid> grid, BlockOperator upper, BlockOperator lower)
      : kind_(kind), grid_(std::move(grid)), upper_(upper), lower_(lower) {}

  ModelKind kind_;
  std::optional<Grid> grid_;
  BlockOperator upper_;
  BlockOperator lower_;
  std::shared_ptr<const SpinBosonData> spin_boson_;
};

/**
 * Truncated H = w_c 1 (x) a^dag a + (w_a / 2) Z (x) 1
 *             + (Omega / 2)(sigma_+ (x) a + sigma_- (x) a^dag)
 * with a|m> = sqrt(m)|m-1>, index a*M + m for |a> (x) |m>.
 */
Eigen::MatrixXcd spin_boson_hamiltonian(double omega_c, double omega_a, double coupling,
                                        int fock_levels);

/// Returns exp(i theta (v (x) 1) H (v (x) 1)^*) psi, exact for every model.
SystemState step(const Model& model, const QubitMatrix& v, double theta, const SystemState& psi);

/// In-place variant used by the evolution engines.
void step_inplace(const Model& model, const QubitMatrix& v, double theta, SystemState& psi);

/// exp(i angle (q^2 + p^2)) applied to a position-space grid vector; |angle| < pi/2.
EnvVector harmonic_rotation(const EnvVector& v, double angle);

/// Fock amplitudes of the coherent state |alpha>, truncated and renormalized.
CVector coherent_fock_state(int levels, cplx alpha);

/// Population carried by the `count` highest Fock levels.
double top_levels_population(const SystemState& psi, int count = 2);

struct CauchyEnv {
  double gamma = 4.0;
  std::optional<double> cutoff;
  Representation representation = Representation::position;
};
/// exp(-i angle (q^2 + p^2)) applied to a position Cauchy state.
struct RotatedCauchyEnv {
  double gamma = 4.0;
  double angle = 0.39269908169872414;  // pi / 8
};
struct GaussianEnv {
  double center = 0.0;
  double momentum = 0.0;
  double width = 1.0;
};
struct FockVacuum {};
struct CoherentEnv {
  cplx alpha = 1.0;
};

using EnvSpec = std::variant<CauchyEnv, RotatedCauchyEnv, GaussianEnv, FockVacuum, CoherentEnv,
                             EnvVector, CVector>;

/// Normalized product state qubit (x) env for the given model.
SystemState initial_state(const Model& model, const QubitVector& qubit, const EnvSpec& env);

namespace qubit {
QubitMatrix identity();
QubitMatrix pauli_x();
QubitMatrix pauli_y();
QubitMatrix pauli_z();
QubitVector zero();
QubitVector one();
QubitVector plus();
QubitVector minus();
}  // namespace qubit

}  // namespace ddsim
