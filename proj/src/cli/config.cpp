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

#include "ddsim/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <fmt/core.h>

#include "ddsim/cli/experiments.hpp"
#include "ddsim/friedrichs_lee.hpp"

namespace ddsim::cli {
namespace {

using Pairs = std::vector<std::pair<const char*, const char*>>;

const Pairs kCommon = {
    {"experiment.name", ""},
    {"experiment.output", "output"},
};

const Pairs& experiment_defaults(const std::string& name) {
  static const std::vector<std::pair<std::string, Pairs>> table = {
      {"fig1",
       {{"model.gamma", "4"},
        {"model.cutoff", "2"},
        {"grid.half_width", "16384"},
        {"grid.points", "262144"},
        {"cutoff_grid.half_width", "4"},
        {"cutoff_grid.points", "16384"},
        {"schedule.t", "0:5:0.05"},
        {"schedule.pulse_interval", "0.5"},
        {"schedule.cycle", "flip"},
        {"oracle.tolerance", "1e-4"},
        {"oracle.cutoff_tolerance", "1e-3"}}},
      {"fig2",
       {{"model.gamma", "1"},
        {"grid.half_width", "64"},
        {"grid.points", "32768"},
        {"schedule.t", "0:4:0.1"},
        {"schedule.n", "1:32"},
        {"schedule.cycle", "flip"},
        {"schedule.engine", "comoving"},
        {"oracle.variant", "derived"},
        {"oracle.tolerance", "1e-3"}}},
      {"fig3",
       {{"schedule.t", "6"}, {"schedule.n", "20"}, {"time_grid.step", "auto"}, {"oracle.tolerance", "1e-12"}}},
      {"qp_error",
       {{"grid.half_width", "20"},
        {"grid.points", "1024"},
        {"schedule.t", "1"},
        {"schedule.n", "4,8,16,32,64"},
        {"schedule.cycle", "flip"},
        {"probes.count", "16"},
        {"probes.seed", "20260101"},
        {"oracle.tolerance", "1e-9"}}},
      {"q2p2_limit",
       {{"grid.half_width", "20"},
        {"grid.points", "1024"},
        {"schedule.t", "1"},
        {"schedule.n", "4,8,16,32,64"},
        {"schedule.cycle", "flip"},
        {"environment.kind", "gaussian"},
        {"environment.center", "1"},
        {"environment.momentum", "0.5"},
        {"environment.width", "0.7071067811865476"},
        {"environment.qubit", "plus"},
        {"basis.hermite_levels", "80"},
        {"oracle.tolerance", "1e-6"}}},
      {"spin_boson_convergence",
       {{"model.omega_c", "1"},
        {"model.omega_a", "1"},
        {"model.coupling", "0.2"},
        {"model.fock_levels", "64"},
        {"environment.alpha", "1"},
        {"environment.qubit", "plus"},
        {"schedule.t", "2"},
        {"schedule.n", "4,8,16,32,64"},
        {"schedule.cycle", "pauli"},
        {"oracle.tolerance", "1e-2"}}},
      {"fl_verdict",
       {{"schedule.t", "6"}, {"schedule.n", "5,10,20,40"}, {"time_grid.step", "auto"}, {"oracle.tolerance", "1e-6"}}},
      {"custom",
       {{"model.kind", "qp2"},
        {"model.gamma", "1"},
        {"model.cutoff", "none"},
        {"model.omega_c", "1"},
        {"model.omega_a", "1"},
        {"model.coupling", "0.2"},
        {"model.fock_levels", "64"},
        {"grid.half_width", "64"},
        {"grid.points", "16384"},
        {"schedule.t", "1"},
        {"schedule.n", "0,4,8,16"},
        {"schedule.cycle", "flip"},
        {"schedule.engine", "split_step"},
        {"environment.kind", "cauchy"},
        {"environment.representation", "momentum"},
        {"environment.center", "0"},
        {"environment.momentum", "0"},
        {"environment.width", "1"},
        {"environment.alpha", "1"},
        {"environment.angle", "0.39269908169872414"},
        {"environment.qubit", "plus"}}},
  };
  for (const auto& [key, pairs] : table) {
    if (key == name) return pairs;
  }
  throw ConfigError("experiment.name", "unknown experiment '" + name + "'");
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty() || !std::isfinite(value)) {
    throw ConfigError(field, "expected a number, got '" + text + "'");
  }
  return value;
}

long long to_integer(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  long long value = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty()) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  return value;
}

const std::string& get(const Settings& s, const std::string& key) {
  const auto node = s.get_child_optional(Settings::path_type(key, '.'));
  if (!node) throw ConfigError(key, "missing setting");
  return node->data();
}

bool has(const Settings& s, const std::string& key) {
  return static_cast<bool>(s.get_child_optional(Settings::path_type(key, '.')));
}

void apply_layer(Settings& base, const Settings& layer, const std::string& origin) {
  for (const auto& [section, keys] : layer) {
    if (keys.empty() && !keys.data().empty()) {
      throw ConfigError(section, "setting outside a section in " + origin);
    }
    for (const auto& [key, value] : keys) {
      const std::string full = section + "." + key;
      if (!has(base, full)) throw ConfigError(full, "unknown setting in " + origin);
      base.put(Settings::path_type(full, '.'), trim(value.data()));
    }
  }
}

std::pair<std::string, std::string> split_override(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || item.find('.') > eq) {
    throw ConfigError(item, "override must look like section.key=value");
  }
  return {trim(item.substr(0, eq)), trim(item.substr(eq + 1))};
}

Settings assemble(const Settings& file, const std::vector<std::string>& overrides) {
  std::string name;
  if (has(file, "experiment.name")) name = trim(get(file, "experiment.name"));
  for (const auto& item : overrides) {
    const auto [key, value] = split_override(item);
    if (key == "experiment.name") name = value;
  }
  if (name.empty()) throw ConfigError("experiment.name", "missing setting");

  Settings merged = default_settings(name);
  apply_layer(merged, file, "config file");
  for (const auto& item : overrides) {
    const auto [key, value] = split_override(item);
    if (!has(merged, key)) throw ConfigError(key, "unknown setting in --set override");
    merged.put(Settings::path_type(key, '.'), value);
  }
  merged.put(Settings::path_type("experiment.name", '.'), name);
  return merged;
}

QubitVector parse_qubit(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "plus" || t == "+") return qubit::plus();
  if (t == "minus" || t == "-") return qubit::minus();
  if (t == "zero" || t == "0") return qubit::zero();
  if (t == "one" || t == "1") return qubit::one();
  throw ConfigError("environment.qubit", "expected plus, minus, zero or one, got '" + text + "'");
}

}  // namespace

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> list = {
      {"fig1", "shallow pocket: free, pulsed and truncated-Cauchy coherence p_+(t)"},
      {"fig2", "q (+) p^2 decoupling error eps(t, n) against the closed form"},
      {"fig3", "Friedrichs-Lee environment excitation phi_{n,t}(s)"},
      {"qp_error", "q (+) p Trotter error against the closed-form U_n(t)"},
      {"q2p2_limit", "q^2 (+) p^2 pulsed states against the exact propagator and the oscillator limit"},
      {"spin_boson_convergence", "spin-boson self-distances and distance to the averaged generator"},
      {"fl_verdict", "Friedrichs-Lee decoupling verdict over n"},
      {"custom", "any model, environment and cycle; reduced-state observables"},
  };
  return list;
}

Settings default_settings(const std::string& experiment) {
  Settings s;
  for (const auto& [key, value] : kCommon) s.put(Settings::path_type(key, '.'), value);
  for (const auto& [key, value] : experiment_defaults(experiment)) s.put(Settings::path_type(key, '.'), value);
  s.put(Settings::path_type("experiment.name", '.'), experiment);
  return s;
}

Settings parse_settings(const std::string& ini_text, const std::vector<std::string>& overrides) {
  Settings file;
  std::istringstream in(ini_text);
  try {
    boost::property_tree::ini_parser::read_ini(in, file);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("ini", e.message() + " at line " + std::to_string(e.line()));
  }
  return assemble(file, overrides);
}

Settings load_settings(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_settings(buffer.str(), overrides);
}

std::vector<double> parse_real_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw ConfigError(field, "empty list entry");
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(to_double(field, parts[0]));
    } else if (parts.size() == 3) {
      const double start = to_double(field, parts[0]);
      const double stop = to_double(field, parts[1]);
      const double step = to_double(field, parts[2]);
      if (!(step > 0.0) || stop < start) throw ConfigError(field, "range needs start <= stop and step > 0");
      const auto count = static_cast<long long>(std::floor((stop - start) / step * (1.0 + 1e-12) + 1e-9));
      for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    } else {
      throw ConfigError(field, "real ranges are written start:stop:step");
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& field, const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw ConfigError(field, "empty list entry");
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(static_cast<int>(to_integer(field, parts[0])));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const auto start = to_integer(field, parts[0]);
      const auto stop = to_integer(field, parts[1]);
      const auto step = parts.size() == 3 ? to_integer(field, parts[2]) : 1;
      if (step < 1 || stop < start) throw ConfigError(field, "range needs start <= stop and step >= 1");
      for (auto i = start; i <= stop; i += step) out.push_back(static_cast<int>(i));
    } else {
      throw ConfigError(field, "integer ranges are written start:stop[:step]");
    }
  }
  return out;
}

std::vector<QubitMatrix> parse_cycle(const std::string& spec) {
  const std::string s = lower(trim(spec));
  if (s == "pauli") return {qubit::identity(), qubit::pauli_x(), qubit::pauli_y(), qubit::pauli_z()};
  if (s == "flip") return {qubit::identity(), qubit::pauli_x()};
  std::vector<QubitMatrix> out;
  for (const auto& item : split(s, ',')) {
    if (item == "1" || item == "i") {
      out.push_back(qubit::identity());
    } else if (item == "x") {
      out.push_back(qubit::pauli_x());
    } else if (item == "y") {
      out.push_back(qubit::pauli_y());
    } else if (item == "z") {
      out.push_back(qubit::pauli_z());
    } else {
      throw ConfigError("schedule.cycle", "unknown cycle element '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("schedule.cycle", "empty cycle");
  return out;
}

ExperimentConfig parse_config(const Settings& s) {
  ExperimentConfig c;
  c.name = get(s, "experiment.name");
  c.output = get(s, "experiment.output");

  auto real = [&](const char* key, double& target) {
    if (has(s, key)) target = to_double(key, get(s, key));
  };
  auto size = [&](const char* key, std::size_t& target) {
    if (!has(s, key)) return;
    const auto v = to_integer(key, get(s, key));
    if (v < 1) throw ConfigError(key, "must be positive");
    target = static_cast<std::size_t>(v);
  };

  if (has(s, "model.kind")) c.model_kind = lower(get(s, "model.kind"));
  real("model.gamma", c.gamma);
  if (has(s, "model.cutoff")) {
    const std::string v = lower(get(s, "model.cutoff"));
    if (v != "none") c.cutoff = to_double("model.cutoff", v);
  }
  real("model.omega_c", c.spin_boson.omega_c);
  real("model.omega_a", c.spin_boson.omega_a);
  real("model.coupling", c.spin_boson.coupling);
  if (has(s, "model.fock_levels")) {
    c.spin_boson.fock_levels = static_cast<int>(to_integer("model.fock_levels", get(s, "model.fock_levels")));
  }

  real("grid.half_width", c.half_width);
  size("grid.points", c.points);
  real("cutoff_grid.half_width", c.cutoff_half_width);
  size("cutoff_grid.points", c.cutoff_points);
  if (has(s, "time_grid.step")) {
    const std::string v = lower(get(s, "time_grid.step"));
    if (v != "auto") c.time_step = to_double("time_grid.step", v);
  }

  if (has(s, "schedule.t")) c.t_values = parse_real_list("schedule.t", get(s, "schedule.t"));
  if (has(s, "schedule.n")) c.n_values = parse_int_list("schedule.n", get(s, "schedule.n"));
  if (has(s, "schedule.cycle")) {
    c.cycle_spec = get(s, "schedule.cycle");
    c.cycle = parse_cycle(c.cycle_spec);
  }
  real("schedule.pulse_interval", c.pulse_interval);
  if (has(s, "schedule.engine")) {
    const std::string v = lower(get(s, "schedule.engine"));
    if (v == "split_step") {
      c.engine = Engine::split_step;
    } else if (v == "comoving") {
      c.engine = Engine::comoving;
    } else {
      throw ConfigError("schedule.engine", "expected split_step or comoving, got '" + v + "'");
    }
  }

  if (has(s, "environment.kind")) c.environment.kind = lower(get(s, "environment.kind"));
  if (has(s, "environment.representation")) {
    const std::string v = lower(get(s, "environment.representation"));
    if (v == "position") {
      c.environment.representation = Representation::position;
    } else if (v == "momentum") {
      c.environment.representation = Representation::momentum;
    } else {
      throw ConfigError("environment.representation", "expected position or momentum");
    }
  }
  real("environment.center", c.environment.center);
  real("environment.momentum", c.environment.momentum);
  real("environment.width", c.environment.width);
  real("environment.alpha", c.environment.alpha);
  real("environment.angle", c.environment.angle);
  if (has(s, "environment.qubit")) c.qubit = parse_qubit(get(s, "environment.qubit"));

  if (has(s, "oracle.variant")) c.oracle_variant = lower(get(s, "oracle.variant"));
  real("oracle.tolerance", c.tolerance);
  real("oracle.cutoff_tolerance", c.cutoff_tolerance);

  if (has(s, "probes.count")) c.probes = static_cast<int>(to_integer("probes.count", get(s, "probes.count")));
  if (has(s, "probes.seed")) {
    const auto v = to_integer("probes.seed", get(s, "probes.seed"));
    if (v < 0) throw ConfigError("probes.seed", "must be non-negative");
    c.seed = static_cast<std::uint64_t>(v);
  }
  if (has(s, "basis.hermite_levels")) {
    c.hermite_levels = static_cast<int>(to_integer("basis.hermite_levels", get(s, "basis.hermite_levels")));
  }
  return c;
}

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_grid(std::vector<std::string>& out, const char* section, double half_width, std::size_t points) {
  if (!(half_width > 0.0)) out.push_back(fmt::format("{}.half_width: must be positive", section));
  if (!is_power_of_two(points)) out.push_back(fmt::format("{}.points: must be a power of two >= 2", section));
}

// Poisson tail P(N >= level) for a coherent state whose mean occupation
// grows at most to (|alpha| + Omega t / 2)^2 under the coupling.
double fock_tail_estimate(double alpha, double coupling, double t, int level) {
  const double mean_root = std::abs(alpha) + 0.5 * std::abs(coupling) * t;
  const double mean = std::max(mean_root * mean_root, 1e-300);
  if (level <= 0) return 1.0;
  return boost::math::gamma_p(static_cast<double>(level), mean);
}

bool is_grid_multiple(double value, double step) {
  const double r = value / step;
  return std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, r);
}

}  // namespace

double effective_time_step(const ExperimentConfig& c) {
  if (c.time_step) return *c.time_step;
  if (c.t_values.empty() || c.n_values.empty()) throw std::invalid_argument("time step needs t and n values");
  const int n_max = *std::max_element(c.n_values.begin(), c.n_values.end());
  const double t = c.t_values.front();
  double step = fl::default_step(t, n_max) * (c.name == "fig3" ? 0.125 : 0.5);
  // Midpoint quadrature loses ds^2/24 (1 - e^{-t/2}) of the norm; halve until
  // that is well inside the norm guard. Halving keeps every window a multiple.
  while (step * step / 24.0 * (1.0 - std::exp(-0.5 * t)) > 0.25 * kNormGuard) step *= 0.5;
  return step;
}

std::vector<std::string> validate(const ExperimentConfig& c) {
  std::vector<std::string> out;
  const auto& names = experiments();
  if (std::none_of(names.begin(), names.end(), [&](const ExperimentInfo& e) { return e.name == c.name; })) {
    out.push_back("experiment.name: unknown experiment '" + c.name + "'");
    return out;
  }

  if (c.t_values.empty()) out.push_back("schedule.t: no time values");
  for (double t : c.t_values) {
    if (!(t >= 0.0)) out.push_back(fmt::format("schedule.t: negative time {}", t));
  }
  const bool allow_free = c.name == "custom";
  for (int n : c.n_values) {
    if (n < (allow_free ? 0 : 1)) out.push_back(fmt::format("schedule.n: invalid cycle count {}", n));
  }
  if (!(c.tolerance > 0.0)) out.push_back("oracle.tolerance: must be positive");
  const double t_max = c.t_values.empty() ? 0.0 : *std::max_element(c.t_values.begin(), c.t_values.end());

  const bool uses_grid = c.name == "fig1" || c.name == "fig2" || c.name == "qp_error" || c.name == "q2p2_limit" ||
                         (c.name == "custom" && c.model_kind != "spin_boson");
  if (uses_grid) check_grid(out, "grid", c.half_width, c.points);

  if (c.name == "fig1") {
    check_grid(out, "cutoff_grid", c.cutoff_half_width, c.cutoff_points);
    if (!(c.gamma > 0.0)) out.push_back("model.gamma: must be positive");
    if (!c.cutoff || !(*c.cutoff > 0.0)) out.push_back("model.cutoff: must be positive");
    if (c.cutoff && *c.cutoff >= c.cutoff_half_width) {
      out.push_back("model.cutoff: truncated support must fit inside cutoff_grid.half_width");
    }
    if (!(c.pulse_interval > 0.0)) out.push_back("schedule.pulse_interval: must be positive");
    if (!(c.cutoff_tolerance > 0.0)) out.push_back("oracle.cutoff_tolerance: must be positive");
  }
  if (c.name == "fig2") {
    if (!(c.gamma > 0.0)) out.push_back("model.gamma: must be positive");
    if (c.n_values.empty()) out.push_back("schedule.n: no cycle counts");
    if (c.oracle_variant != "derived" && c.oracle_variant != "published") {
      out.push_back("oracle.variant: expected derived or published");
    }
  }
  if (c.name == "qp_error" && c.probes < 1) out.push_back("probes.count: must be >= 1");
  if (c.name == "q2p2_limit") {
    if (c.hermite_levels < 1) out.push_back("basis.hermite_levels: must be >= 1");
    const double turning = std::sqrt(2.0 * c.hermite_levels + 1.0);
    const double k_max = std::numbers::pi * static_cast<double>(c.points) / (2.0 * c.half_width);
    if (turning + 6.0 > c.half_width || turning + 6.0 > k_max) {
      out.push_back("basis.hermite_levels: Hermite functions are not resolved by the grid");
    }
    for (int n : c.n_values) {
      for (double t : c.t_values) {
        if (!(static_cast<double>(n) > t)) {
          out.push_back(fmt::format("schedule.n: closed form needs n > t (n = {}, t = {})", n, t));
        }
      }
    }
  }
  if (c.name == "spin_boson_convergence" || (c.name == "custom" && c.model_kind == "spin_boson")) {
    const int m = c.spin_boson.fock_levels;
    if (m < 2) {
      out.push_back("model.fock_levels: need at least 2 levels");
    } else {
      const double tail = fock_tail_estimate(c.environment.alpha, c.spin_boson.coupling, t_max, m - 2);
      if (tail > 1e-8) {
        out.push_back(fmt::format(
            "model.fock_levels: truncation headroom too small, estimated top-level population {:.3e} > 1e-8",
            tail));
      }
    }
  }
  if (c.name == "fig3" || c.name == "fl_verdict") {
    if (c.t_values.size() != 1) out.push_back("schedule.t: Friedrichs-Lee experiments take exactly one t");
    if (c.n_values.empty()) out.push_back("schedule.n: no cycle counts");
    if (!c.t_values.empty() && !c.n_values.empty() && c.t_values[0] > 0.0) {
      const double t = c.t_values[0];
      const int n_max = *std::max_element(c.n_values.begin(), c.n_values.end());
      const bool verdict = c.name == "fl_verdict";
      const double step = n_max >= 1 ? effective_time_step(c) : 0.0;
      if (!(step > 0.0)) {
        out.push_back("time_grid.step: must be positive");
      } else {
        for (int n : c.n_values) {
          if (n < 1) continue;
          for (int mult : verdict ? std::vector<int>{1, 2} : std::vector<int>{1}) {
            const double tau = t / (4.0 * n * mult);
            if (!is_grid_multiple(tau, step)) {
              out.push_back(fmt::format("time_grid.step: pulse interval tau = {} (n = {}) is not a multiple of {}",
                                        tau, n * mult, step));
            }
          }
        }
        if (!is_grid_multiple(t, step)) out.push_back("time_grid.step: t is not a multiple of the step");
      }
    } else if (!c.t_values.empty() && !(c.t_values[0] > 0.0)) {
      out.push_back("schedule.t: Friedrichs-Lee experiments need t > 0");
    }
  }
  if (c.name == "custom") {
    static const std::vector<std::string> kinds = {"shallow_pocket", "qp", "qp2", "q2p2", "spin_boson"};
    if (std::find(kinds.begin(), kinds.end(), c.model_kind) == kinds.end()) {
      out.push_back("model.kind: expected one of shallow_pocket, qp, qp2, q2p2, spin_boson");
    }
    static const std::vector<std::string> envs = {"cauchy", "rotated_cauchy", "gaussian", "coherent", "vacuum"};
    if (std::find(envs.begin(), envs.end(), c.environment.kind) == envs.end()) {
      out.push_back("environment.kind: expected cauchy, rotated_cauchy, gaussian, coherent or vacuum");
    }
    const bool fock_env = c.environment.kind == "coherent" || c.environment.kind == "vacuum";
    if ((c.model_kind == "spin_boson") != fock_env) {
      out.push_back("environment.kind: Fock environments go with spin_boson, grid environments with grid models");
    }
    if ((c.environment.kind == "cauchy" || c.environment.kind == "rotated_cauchy") && !(c.gamma > 0.0)) {
      out.push_back("model.gamma: must be positive");
    }
    if (c.environment.kind == "rotated_cauchy" && !(std::abs(c.environment.angle) < std::numbers::pi / 2)) {
      out.push_back("environment.angle: rotation needs |angle| < pi/2");
    }
    if (c.environment.kind == "gaussian" && !(c.environment.width > 0.0)) {
      out.push_back("environment.width: must be positive");
    }
    if (c.engine == Engine::comoving && c.model_kind != "qp2" && c.model_kind != "qp") {
      out.push_back("schedule.engine: comoving needs a model with one position-linear block (qp, qp2)");
    }
  }
  return out;
}

}  // namespace ddsim::cli
