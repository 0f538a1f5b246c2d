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

#include "ddsim/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/core.h>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "ddsim/cli/worker_pool.hpp"
#include "ddsim/decoupling.hpp"
#include "ddsim/friedrichs_lee.hpp"
#include "ddsim/observables.hpp"
#include "ddsim/oracles.hpp"

namespace ddsim::cli {
namespace {

struct Point {
  std::vector<Cell> row;
  std::vector<std::string> failures;
};

struct TN {
  double t;
  int n;
};

std::vector<TN> sweep(const ExperimentConfig& c) {
  std::vector<TN> out;
  for (double t : c.t_values) {
    for (int n : c.n_values) out.push_back({t, n});
  }
  return out;
}

void guard_norm(const SystemState& psi, const std::string& where, std::vector<std::string>& failures) {
  const double drift = std::abs(psi.norm() - 1.0);
  if (drift > kNormGuard) failures.push_back(fmt::format("{}: norm drift {:.3e} exceeds {:.0e}", where, drift, kNormGuard));
}

void guard_fock(const SystemState& psi, const std::string& where, std::vector<std::string>& failures) {
  if (psi.backend != Backend::fock) return;
  const double top = top_levels_population(psi, 2);
  if (top > kFockGuard) {
    failures.push_back(fmt::format("{}: Fock truncation overflow, top-two population {:.3e}", where, top));
  }
}

void guard_deviation(double deviation, double tolerance, const std::string& what,
                     std::vector<std::string>& failures) {
  if (!(deviation <= tolerance)) {
    failures.push_back(fmt::format("{}: deviation {:.3e} exceeds tolerance {:.3e}", what, deviation, tolerance));
  }
}

RunResult collect(std::vector<std::string> columns, std::vector<Point> points) {
  RunResult r;
  r.table.columns = std::move(columns);
  for (auto& p : points) {
    r.table.add_row(std::move(p.row));
    for (auto& f : p.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

Cell ll(long long v) { return v; }

SystemState pulsed(const Model& model, const DecouplingCycle& cycle, double t, int n, const SystemState& psi0,
                   Engine engine) {
  const PulseSchedule schedule(cycle, t, n);
  return engine == Engine::comoving ? evolve_pulsed_comoving(model, schedule, psi0)
                                    : evolve_pulsed(model, schedule, psi0);
}

// ---------------------------------------------------------------------------

RunResult run_fig1(const ExperimentConfig& c, unsigned jobs) {
  const Grid grid = make_grid(c.half_width, c.points);
  const Grid cut_grid = make_grid(c.cutoff_half_width, c.cutoff_points);
  const Model model = Model::shallow_pocket(grid);
  const Model cut_model = Model::shallow_pocket(cut_grid);
  const SystemState psi0 = initial_state(model, qubit::plus(), CauchyEnv{c.gamma, std::nullopt});
  const SystemState cut0 = initial_state(cut_model, qubit::plus(), CauchyEnv{c.gamma, c.cutoff});
  const DecouplingCycle cycle(c.cycle);
  const double p0 = coherence_plus(reduce(psi0));

  auto points = parallel_map<Point>(c.t_values.size(), jobs, [&](std::size_t i) {
    const double t = c.t_values[i];
    Point p;
    const auto free = evolve_free(model, t, psi0);
    const auto kicked = evolve_kicked(model, cycle, c.pulse_interval, t, psi0);
    const auto cut = evolve_free(cut_model, t, cut0);
    const std::string where = fmt::format("t={}", t);
    guard_norm(free, where, p.failures);
    guard_norm(kicked, where, p.failures);
    guard_norm(cut, where, p.failures);
    const double pf = coherence_plus(reduce(free));
    const double pp = coherence_plus(reduce(kicked)) / p0;
    const double pc = coherence_plus(reduce(cut));
    const double of = oracles::shallow_pocket_coherence(t, c.gamma, std::nullopt);
    const double oc = oracles::shallow_pocket_coherence(t, c.gamma, c.cutoff);
    guard_deviation(std::abs(pf - of), c.tolerance, where + " p_plus_free", p.failures);
    guard_deviation(std::abs(pc - oc), c.cutoff_tolerance, where + " p_plus_cutoff_free", p.failures);
    p.row = {t, pf, pp, pc, of, std::abs(pf - of), oc, std::abs(pc - oc)};
    return p;
  });
  return collect({"t", "p_plus_free", "p_plus_pulsed", "p_plus_cutoff_free", "p_plus_free_oracle", "abs_dev_free",
                  "p_plus_cutoff_oracle", "abs_dev_cutoff"},
                 std::move(points));
}

RunResult run_fig2(const ExperimentConfig& c, unsigned jobs) {
  const Grid grid = make_grid(c.half_width, c.points);
  const Model model = Model::qp2(grid);
  const SystemState psi0 =
      initial_state(model, qubit::plus(), CauchyEnv{c.gamma, std::nullopt, Representation::momentum});
  const DecouplingCycle cycle(c.cycle);
  const bool published = c.oracle_variant == "published";
  const auto pts = sweep(c);

  auto points = parallel_map<Point>(pts.size(), jobs, [&](std::size_t i) {
    const auto [t, n] = pts[i];
    Point p;
    const auto psi = pulsed(model, cycle, t, n, psi0, c.engine);
    const std::string where = fmt::format("t={} n={}", t, n);
    guard_norm(psi, where, p.failures);
    const double eps = decoupling_infidelity(reduce(psi), qubit::plus());
    const double oracle = published ? oracles::eps_qp2(t, n, c.gamma) : oracles::eps_qp2_derived(t, n, c.gamma);
    guard_deviation(std::abs(eps - oracle), c.tolerance, where + " eps", p.failures);
    p.row = {t, ll(n), eps, oracle, std::abs(eps - oracle)};
    return p;
  });
  auto r = collect({"t", "n", "eps_sim", "eps_oracle", "abs_dev"}, std::move(points));
  r.notes.push_back(fmt::format("oracle variant: {}", published ? "published (t^3/16n)" : "derived (t^3/8n)"));
  return r;
}

RunResult run_fig3(const ExperimentConfig& c, unsigned /*jobs*/) {
  const double t = c.t_values.front();
  const int n = c.n_values.front();
  const fl::TimeGrid grid = fl::make_time_grid(t, effective_time_step(c));
  const fl::FLState psi = fl::pulsed_evolution(grid, t, n);
  const CVector phi = fl::phi_from_state(psi);

  RunResult r;
  r.table.columns = {"s", "phi_sim", "phi_oracle", "abs_dev"};
  const double drift = std::abs(psi.norm_squared() - 1.0);
  if (drift > kNormGuard) r.failures.push_back(fmt::format("norm drift {:.3e} exceeds {:.0e}", drift, kNormGuard));
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double s = grid.center(j);
    const cplx value = phi(static_cast<Eigen::Index>(j));
    const double oracle = oracles::phi_nt(n, t, s);
    const double dev = std::abs(value - oracle);
    worst = std::max(worst, dev);
    r.table.add_row({s, value.real(), oracle, dev});
  }
  guard_deviation(worst, c.tolerance, "phi", r.failures);
  r.notes.push_back(fmt::format("time step {:.6g}, {} cells", grid.ds(), grid.size()));
  return r;
}

RunResult run_qp_error(const ExperimentConfig& c, unsigned jobs) {
  const Grid grid = make_grid(c.half_width, c.points);
  const Model model = Model::qp(grid);
  const DecouplingCycle cycle(c.cycle);

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> center(-2.0, 2.0);
  std::uniform_real_distribution<double> momentum(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.6, 1.4);
  std::normal_distribution<double> normal;
  std::vector<std::pair<QubitVector, EnvVector>> probes;
  for (int i = 0; i < c.probes; ++i) {
    QubitVector q(cplx(normal(rng), normal(rng)), cplx(normal(rng), normal(rng)));
    q.normalize();
    probes.emplace_back(q, gaussian_state(grid, center(rng), momentum(rng), width(rng)));
  }

  const auto pts = sweep(c);
  auto points = parallel_map<Point>(pts.size(), jobs, [&](std::size_t i) {
    const auto [t, n] = pts[i];
    Point p;
    double worst = 0.0;
    for (const auto& [q, env] : probes) {
      const auto psi = evolve_pulsed(model, PulseSchedule(cycle, t, n), SystemState::product(q, env));
      const auto ref = SystemState::product(q, oracles::qp_limit_propagate(env, t));
      guard_norm(psi, fmt::format("t={} n={}", t, n), p.failures);
      worst = std::max(worst, state_distance(psi, ref));
    }
    const double oracle = oracles::un_qp_error(t, n);
    guard_deviation(std::abs(worst - oracle), c.tolerance, fmt::format("t={} n={} error", t, n), p.failures);
    p.row = {t, ll(n), worst, oracle, std::abs(worst - oracle)};
    return p;
  });
  auto r = collect({"t", "n", "error_sim", "error_oracle", "abs_dev"}, std::move(points));
  r.notes.push_back(fmt::format("{} probe states, seed {}", c.probes, c.seed));
  return r;
}

RunResult run_q2p2(const ExperimentConfig& c, unsigned jobs) {
  const Grid grid = make_grid(c.half_width, c.points);
  const Model model = Model::q2p2(grid);
  const DecouplingCycle cycle(c.cycle);
  const EnvVector env = gaussian_state(grid, c.environment.center, c.environment.momentum, c.environment.width);
  const SystemState psi0 = SystemState::product(c.qubit, env);
  const oracles::HermiteBasis basis(grid, c.hermite_levels);

  RunResult head;
  const double residual =
      std::sqrt((basis.synthesize(basis.project(env)).amplitudes - env.amplitudes).squaredNorm() * grid.dx());
  if (residual > 1e-10) {
    head.failures.push_back(fmt::format("Hermite basis misses {:.3e} of the initial state", residual));
  }

  const auto pts = sweep(c);
  auto points = parallel_map<Point>(pts.size(), jobs, [&](std::size_t i) {
    const auto [t, n] = pts[i];
    Point p;
    const auto psi = evolve_pulsed(model, PulseSchedule(cycle, t, n), psi0);
    const std::string where = fmt::format("t={} n={}", t, n);
    guard_norm(psi, where, p.failures);
    const auto ref = oracles::apply_q2p2_generator(oracles::un_q2p2_generator(t, n), psi0, basis);
    const auto half = SystemState::product(c.qubit, oracles::oscillator_propagate(env, 0.5 * t, basis));
    const auto literal = SystemState::product(c.qubit, oracles::oscillator_propagate(env, t, basis));
    const double d_ref = state_distance(psi, ref);
    guard_deviation(d_ref, c.tolerance, where + " reference", p.failures);
    p.row = {t, ll(n), d_ref, state_distance(psi, half), state_distance(psi, literal)};
    return p;
  });
  auto r = collect({"t", "n", "dist_reference", "dist_oscillator", "dist_oscillator_literal"}, std::move(points));
  r.failures.insert(r.failures.begin(), head.failures.begin(), head.failures.end());
  r.notes.push_back("dist_oscillator: exp(i t/2 (q^2+p^2)); dist_oscillator_literal: exp(i t (q^2+p^2))");
  return r;
}

Eigen::MatrixXcd averaged_generator(const Model& model, const DecouplingCycle& cycle) {
  const auto m = static_cast<Eigen::Index>(model.spin_boson_params().fock_levels);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (const auto& v : cycle.sequence()) {
    const Eigen::MatrixXcd big = Eigen::kroneckerProduct(Eigen::MatrixXcd(v), id);
    acc += big * model.hamiltonian() * big.adjoint();
  }
  return acc / static_cast<double>(cycle.length());
}

SystemState apply_dense(const Eigen::MatrixXcd& u, const SystemState& psi) {
  const auto m = psi.data.cols();
  Eigen::VectorXcd flat(2 * m);
  flat.head(m) = psi.data.row(0).transpose();
  flat.tail(m) = psi.data.row(1).transpose();
  flat = u * flat;
  SystemState out = psi;
  out.data.row(0) = flat.head(m).transpose();
  out.data.row(1) = flat.tail(m).transpose();
  return out;
}

RunResult run_spin_boson(const ExperimentConfig& c, unsigned jobs) {
  const Model model = Model::spin_boson(c.spin_boson);
  const DecouplingCycle cycle(c.cycle);
  const SystemState psi0 =
      SystemState::product(c.qubit, coherent_fock_state(c.spin_boson.fock_levels, c.environment.alpha));
  const Eigen::MatrixXcd hbar = averaged_generator(model, cycle);
  const int n_max = *std::max_element(c.n_values.begin(), c.n_values.end());

  RunResult r;
  r.table.columns = {"t", "n", "self_distance", "distance_averaged", "top_population"};
  for (double t : c.t_values) {
    const SystemState ref = apply_dense((cplx(0.0, t) * hbar).exp(), psi0);
    const auto states = parallel_map<SystemState>(2 * c.n_values.size(), jobs, [&](std::size_t i) {
      const int n = c.n_values[i / 2] * (i % 2 == 0 ? 1 : 2);
      return evolve_pulsed(model, PulseSchedule(cycle, t, n), psi0);
    });
    for (std::size_t k = 0; k < c.n_values.size(); ++k) {
      const int n = c.n_values[k];
      const auto& psi = states[2 * k];
      const auto& psi2 = states[2 * k + 1];
      const std::string where = fmt::format("t={} n={}", t, n);
      for (const auto* s : {&psi, &psi2}) {
        guard_norm(*s, where, r.failures);
        guard_fock(*s, where, r.failures);
      }
      const double d_avg = state_distance(psi, ref);
      if (n == n_max) guard_deviation(d_avg, c.tolerance, where + " averaged generator", r.failures);
      r.table.add_row({t, ll(n), state_distance(psi2, psi), d_avg, top_levels_population(psi, 2)});
    }
  }
  r.notes.push_back("tolerance applies to distance_averaged at the largest n");
  return r;
}

RunResult run_fl_verdict(const ExperimentConfig& c, unsigned /*jobs*/) {
  const double t = c.t_values.front();
  const auto v = fl::decoupling_verdict(t, c.n_values, effective_time_step(c));
  RunResult r;
  r.table.columns = {"n",          "amp_first",   "norm_phi",        "self_distance",
                     "amp_oracle", "amp_abs_dev", "norm_phi_oracle", "norm_abs_dev"};
  const double amp_oracle = std::exp(-0.25 * t);
  const double norm_oracle = std::sqrt(1.0 - std::exp(-0.5 * t));
  for (const auto& row : v.rows) {
    const double da = std::abs(row.amp_first - amp_oracle);
    const double dn = std::abs(row.norm_phi - norm_oracle);
    guard_deviation(da, c.tolerance, fmt::format("n={} amp_first", row.n), r.failures);
    guard_deviation(dn, c.tolerance, fmt::format("n={} norm_phi", row.n), r.failures);
    r.table.add_row({ll(row.n), row.amp_first, row.norm_phi, row.self_distance, amp_oracle, da, norm_oracle, dn});
  }
  r.notes.push_back(fmt::format("amplitude persists: {}; norm bounded below: {}; self-distance persists: {}",
                                v.amplitude_persists(), v.norm_bounded_below(), v.self_distance_persists()));
  r.notes.push_back(fmt::format("decoupling fails: {}", v.decoupling_fails()));
  return r;
}

Model custom_model(const ExperimentConfig& c) {
  if (c.model_kind == "spin_boson") return Model::spin_boson(c.spin_boson);
  const Grid grid = make_grid(c.half_width, c.points);
  if (c.model_kind == "shallow_pocket") return Model::shallow_pocket(grid);
  if (c.model_kind == "qp") return Model::qp(grid);
  if (c.model_kind == "qp2") return Model::qp2(grid);
  if (c.model_kind == "q2p2") return Model::q2p2(grid);
  throw std::invalid_argument("unknown model kind " + c.model_kind);
}

EnvSpec custom_environment(const ExperimentConfig& c) {
  const auto& e = c.environment;
  if (e.kind == "cauchy") return CauchyEnv{c.gamma, c.cutoff, e.representation};
  if (e.kind == "rotated_cauchy") return RotatedCauchyEnv{c.gamma, e.angle};
  if (e.kind == "gaussian") return GaussianEnv{e.center, e.momentum, e.width};
  if (e.kind == "coherent") return CoherentEnv{e.alpha};
  if (e.kind == "vacuum") return FockVacuum{};
  throw std::invalid_argument("unknown environment kind " + e.kind);
}

RunResult run_custom(const ExperimentConfig& c, unsigned jobs) {
  const Model model = custom_model(c);
  const SystemState psi0 = initial_state(model, c.qubit, custom_environment(c));
  const DecouplingCycle cycle(c.cycle);
  const auto pts = sweep(c);

  auto points = parallel_map<Point>(pts.size(), jobs, [&](std::size_t i) {
    const auto [t, n] = pts[i];
    Point p;
    const auto psi = n == 0 ? evolve_free(model, t, psi0) : pulsed(model, cycle, t, n, psi0, c.engine);
    const std::string where = fmt::format("t={} n={}", t, n);
    guard_norm(psi, where, p.failures);
    guard_fock(psi, where, p.failures);
    const auto rho = reduce(psi);
    const double purity = (rho.rho * rho.rho).trace().real();
    p.row = {t,
             ll(n),
             coherence_plus(rho),
             decoupling_infidelity(rho, c.qubit),
             rho.rho(0, 0).real(),
             rho.rho(0, 1).real(),
             rho.rho(0, 1).imag(),
             purity,
             psi.norm()};
    return p;
  });
  auto r = collect({"t", "n", "p_plus", "infidelity", "rho00", "rho01_re", "rho01_im", "purity", "norm"},
                   std::move(points));
  r.notes.push_back("n = 0 rows are free evolution exp(-i t H)");
  return r;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, unsigned jobs) {
  const auto violations = validate(config);
  if (!violations.empty()) throw std::invalid_argument("configuration is invalid: " + violations.front());
  jobs = std::max(1u, jobs);
  if (config.name == "fig1") return run_fig1(config, jobs);
  if (config.name == "fig2") return run_fig2(config, jobs);
  if (config.name == "fig3") return run_fig3(config, jobs);
  if (config.name == "qp_error") return run_qp_error(config, jobs);
  if (config.name == "q2p2_limit") return run_q2p2(config, jobs);
  if (config.name == "spin_boson_convergence") return run_spin_boson(config, jobs);
  if (config.name == "fl_verdict") return run_fl_verdict(config, jobs);
  if (config.name == "custom") return run_custom(config, jobs);
  throw std::invalid_argument("unknown experiment " + config.name);
}

}  // namespace ddsim::cli
