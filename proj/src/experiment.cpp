// Copyright 2026 The sbsim Authors
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

#include "sbsim/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sbsim/kernels.hpp"
#include "sbsim/log.hpp"
#include "sbsim/metrics.hpp"

namespace sbsim {

using nlohmann::json;

namespace {

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::TrotterSweep, "trotter_sweep"},
    {ExperimentKind::NoiseSweep, "noise_sweep"},
    {ExperimentKind::InfidelityVsTime, "infidelity_vs_time"},
    {ExperimentKind::GammaSweep, "gamma_sweep"},
    {ExperimentKind::Observables, "observables"},
    {ExperimentKind::Correlations, "correlations"},
    {ExperimentKind::GateCounts, "gate_counts"},
};

}  // namespace

std::string_view to_string(ExperimentKind k) {
  for (auto [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view s) {
  for (auto [kind, name] : kKindNames)
    if (s == name) return kind;
  return std::nullopt;
}

unsigned step_count(double t_final, double dt) {
  if (!(dt > 0) || !(t_final >= 0)) throw std::invalid_argument("step_count: need dt > 0 and t_final >= 0");
  return static_cast<unsigned>(std::ceil(t_final / dt - 1e-9));
}

// ---------------------------------------------------------------------------
// Configuration

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.out = std::string(to_string(kind)) + ".csv";
  switch (kind) {
    case ExperimentKind::TrotterSweep: break;
    case ExperimentKind::NoiseSweep:
      c.orders = {2};
      c.dts = {0.2};
      c.gammas = {1.0};
      c.xis = {0.01, 0.1, 1.0};
      break;
    case ExperimentKind::InfidelityVsTime:
      c.dts = {0.2};
      c.gammas = {1.0};
      c.xis = {0.01, 0.1, 1.0};
      break;
    case ExperimentKind::GammaSweep:
      c.orders = {2};
      c.dts = {0.2};
      c.gammas = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
      c.xis = {0.0, 0.01};
      break;
    case ExperimentKind::Observables:
      c.dts = {0.2};
      c.gammas = {1.0};
      c.xis = {0.01, 0.1, 1.0};
      break;
    case ExperimentKind::Correlations:
      c.model.n_spins = 2;
      c.model.omega = 6.0;
      c.dts = {0.2};
      c.gammas = {1.0};
      c.xis = {0.01, 0.1, 1.0};
      break;
    case ExperimentKind::GateCounts: c.orders = {1, 2}; break;
  }
  return c;
}

std::vector<std::string> ExperimentConfig::problems() const {
  std::vector<std::string> out;
  for (const auto& p : model.problems()) out.push_back("model: " + p);
  if (orders.empty()) out.push_back("orders: grid is empty");
  for (int o : orders)
    if (o != 1 && o != 2) out.push_back("orders: " + std::to_string(o) + " is not 1 or 2");
  if (!(t_final > 0) || !std::isfinite(t_final)) out.push_back("t_final must be positive");

  if (kind == ExperimentKind::GateCounts) {
    if (count_spins.empty()) out.push_back("gate_counts.spins: grid is empty");
    if (count_levels.empty()) out.push_back("gate_counts.levels: grid is empty");
    if (count_codes.empty()) out.push_back("gate_counts.codes: grid is empty");
    for (unsigned s : count_spins)
      if (s < 1 || s > 2) out.push_back("gate_counts.spins: " + std::to_string(s) + " outside {1, 2}");
    for (unsigned l : count_levels) {
      if (l < 2) out.push_back("gate_counts.levels: " + std::to_string(l) + " < 2");
      else if (l > 8) out.push_back("gate_counts.levels: " + std::to_string(l) + " does not fit the 7-qubit device");
    }
    return out;
  }

  if (dts.empty()) out.push_back("dts: grid is empty");
  for (double dt : dts)
    if (!(dt > 0) || !std::isfinite(dt)) out.push_back("dts: " + std::to_string(dt) + " is not positive");
  if (gammas.empty()) out.push_back("gammas: grid is empty");
  for (double g : gammas)
    if (!(g >= 0) || !std::isfinite(g)) out.push_back("gammas: " + std::to_string(g) + " is negative");
  if (xis.empty()) out.push_back("xis: grid is empty");
  for (double x : xis)
    if (!(x >= 0 && x <= 1)) out.push_back("xis: " + std::to_string(x) + " outside [0, 1]");
  if (kind == ExperimentKind::Correlations && model.n_spins != 2) out.push_back("correlations need n_spins = 2");
  if (model.n_spins > 2) out.push_back("model: at most 2 spins fit the 7-qubit device");
  if (model.levels >= 2 && model.n_spins >= 1) {
    const unsigned width = 2 * model.n_spins + TruncationSpec{model.levels}.qubits();
    if (width > 7) out.push_back("model: circuit needs " + std::to_string(width) + " qubits, device has 7");
  }
  return out;
}

void ExperimentConfig::validate() const {
  const auto p = problems();
  if (p.empty()) return;
  std::string msg = "invalid experiment configuration:";
  for (const auto& s : p) msg += "\n  " + s;
  throw std::invalid_argument(msg);
}

ExperimentConfig ExperimentConfig::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config JSON: ") + e.what());
  }
  ExperimentConfig base;
  if (doc.contains("experiment")) {
    const auto kind = parse_experiment_kind(doc["experiment"].get<std::string>());
    if (!kind) throw std::invalid_argument("config: unknown experiment '" + doc["experiment"].get<std::string>() + "'");
    base = defaults(*kind);
  }
  return from_json(text, base);
}

ExperimentConfig ExperimentConfig::from_json(std::string_view text, ExperimentConfig c) {
  std::vector<std::string> errors;
  try {
    const json doc = json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");
    static const std::set<std::string> known{"experiment", "model",     "code",       "orders",      "dts",
                                             "t_final",    "xis",       "gammas",     "shots",       "seed",
                                             "convention", "out",       "calibration", "threads",    "gate_counts"};
    for (const auto& [key, _] : doc.items())
      if (!known.count(key)) errors.push_back("unknown key '" + key + "'");

    if (doc.contains("experiment")) {
      const auto kind = parse_experiment_kind(doc["experiment"].get<std::string>());
      if (kind) c.kind = *kind;
      else errors.push_back("unknown experiment '" + doc["experiment"].get<std::string>() + "'");
    }
    if (doc.contains("model")) {
      const auto& m = doc["model"];
      static const std::set<std::string> model_keys{"h", "epsilon", "omega", "lambda", "n_spins", "levels"};
      for (const auto& [key, _] : m.items())
        if (!model_keys.count(key)) errors.push_back("unknown model key '" + key + "'");
      c.model.h = m.value("h", c.model.h);
      c.model.epsilon = m.value("epsilon", c.model.epsilon);
      c.model.omega = m.value("omega", c.model.omega);
      c.model.lambda = m.value("lambda", c.model.lambda);
      c.model.n_spins = m.value("n_spins", c.model.n_spins);
      c.model.levels = m.value("levels", c.model.levels);
    }
    if (doc.contains("code")) {
      const auto code = parse_code_kind(doc["code"].get<std::string>());
      if (code) c.code = *code;
      else errors.push_back("unknown code '" + doc["code"].get<std::string>() + "'");
    }
    if (doc.contains("orders")) c.orders = doc["orders"].get<std::vector<int>>();
    if (doc.contains("dts")) c.dts = doc["dts"].get<std::vector<double>>();
    if (doc.contains("t_final")) c.t_final = doc["t_final"].get<double>();
    if (doc.contains("xis")) c.xis = doc["xis"].get<std::vector<double>>();
    if (doc.contains("gammas")) c.gammas = doc["gammas"].get<std::vector<double>>();
    if (doc.contains("shots")) c.shots = doc["shots"].get<std::uint64_t>();
    if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("convention")) {
      const auto conv = parse_rate_convention(doc["convention"].get<std::string>());
      if (conv) c.convention = *conv;
      else errors.push_back("unknown convention '" + doc["convention"].get<std::string>() + "'");
    }
    if (doc.contains("out")) c.out = doc["out"].get<std::string>();
    if (doc.contains("calibration") && !doc["calibration"].is_null())
      c.calibration = doc["calibration"].get<std::string>();
    if (doc.contains("threads")) c.threads = doc["threads"].get<unsigned>();
    if (doc.contains("gate_counts")) {
      const auto& g = doc["gate_counts"];
      if (g.contains("spins")) c.count_spins = g["spins"].get<std::vector<unsigned>>();
      if (g.contains("levels")) c.count_levels = g["levels"].get<std::vector<unsigned>>();
      if (g.contains("codes")) {
        c.count_codes.clear();
        for (const auto& name : g["codes"]) {
          const auto code = parse_code_kind(name.get<std::string>());
          if (code) c.count_codes.push_back(*code);
          else errors.push_back("unknown code '" + name.get<std::string>() + "'");
        }
      }
    }
  } catch (const json::exception& e) {
    errors.push_back(e.what());
  }
  if (!errors.empty()) {
    std::string msg = "invalid experiment configuration:";
    for (const auto& s : errors) msg += "\n  " + s;
    throw std::invalid_argument(msg);
  }
  return c;
}

std::string ExperimentConfig::to_json() const {
  json doc;
  doc["experiment"] = std::string(to_string(kind));
  doc["model"] = {{"h", model.h},         {"epsilon", model.epsilon}, {"omega", model.omega},
                  {"lambda", model.lambda}, {"n_spins", model.n_spins}, {"levels", model.levels}};
  doc["code"] = std::string(to_string(code));
  doc["orders"] = orders;
  doc["dts"] = dts;
  doc["t_final"] = t_final;
  doc["xis"] = xis;
  doc["gammas"] = gammas;
  doc["shots"] = shots;
  doc["seed"] = seed;
  doc["convention"] = std::string(to_string(convention));
  doc["out"] = out.string();
  doc["calibration"] = calibration.empty() ? json(nullptr) : json(calibration.string());
  doc["threads"] = threads;
  json codes = json::array();
  for (auto k : count_codes) codes.push_back(std::string(to_string(k)));
  doc["gate_counts"] = {{"spins", count_spins}, {"levels", count_levels}, {"codes", codes}};
  return doc.dump(2);
}

std::string ExperimentConfig::hash() const {
  // Output location and thread count do not change results.
  json doc = json::parse(to_json());
  doc.erase("out");
  doc.erase("threads");
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Pipeline

double PointResult::average_infidelity() const { return time_averaged_infidelity(sim, exact); }

double PointResult::final_infidelity() const { return infidelity(sim.back(), exact.back()); }

std::vector<double> PointResult::infidelities() const {
  std::vector<double> out;
  for (std::size_t k = 0; k < sim.size(); ++k) out.push_back(infidelity(sim[k], exact[k]));
  return out;
}

Pipeline::Pipeline(const ExperimentConfig& config, CalibrationData calibration)
    : config_(config), calibration_(std::move(calibration)), coupling_(CouplingMap::jakarta()) {
  calibration_.validate();
  if (calibration_.qubits.size() < coupling_.size())
    throw std::invalid_argument("calibration covers fewer qubits than the device map");
}

ModelParams Pipeline::params_for(double gamma) const {
  ModelParams p = config_.model;
  p.gamma = gamma;
  return p;
}

std::vector<unsigned> Pipeline::layout(int order) {
  std::lock_guard lock(mutex_);
  if (auto it = layouts_.find(order); it != layouts_.end()) return it->second;
  const SpinBosonModel model(params_for(1.0), config_.code);
  EvolutionSpec spec{1, 0.2, order, config_.convention, true};
  const Circuit body = assemble_evolution(model, default_initial_state(model.params().n_spins), spec);
  auto l = choose_layout(body, coupling_);
  layouts_[order] = l;
  return l;
}

std::shared_ptr<const NoiseModel> Pipeline::noise(double xi) {
  std::lock_guard lock(mutex_);
  auto& slot = noise_[xi];
  if (!slot) slot = std::make_shared<const NoiseModel>(NoiseModel::build(calibration_, xi));
  return slot;
}

std::shared_ptr<const std::vector<TrajectorySnapshot>> Pipeline::oracle(double gamma, double dt, unsigned n_steps) {
  const auto key = std::make_tuple(gamma, dt, n_steps);
  {
    std::lock_guard lock(mutex_);
    if (auto it = oracles_.find(key); it != oracles_.end()) return it->second;
  }
  const SpinBosonModel model(params_for(gamma), config_.code);
  const LindbladOracle oracle(model, config_.convention);
  const auto grid = uniform_grid(dt, n_steps);
  auto traj = std::make_shared<const std::vector<TrajectorySnapshot>>(
      oracle.evolve(model.initial_state(default_initial_state(model.params().n_spins)), grid));
  std::lock_guard lock(mutex_);
  return oracles_.emplace(key, std::move(traj)).first->second;
}

PointResult Pipeline::run(const PointSpec& point) {
  const SpinBosonModel model(params_for(point.gamma), config_.code);
  const InitialStateSpec init = default_initial_state(model.params().n_spins);
  PointResult r;
  r.spec = point;
  r.n_steps = step_count(config_.t_final, point.dt);
  const Circuit circuit =
      assemble_evolution(model, init, {r.n_steps, point.dt, point.order, config_.convention, false});
  const EvolutionLayout evo = EvolutionLayout::make(model.params().n_spins, model.truncation().qubits());

  const RoutedCircuit routed = compact(transpile(circuit, coupling_, layout(point.order)));
  SimOptions opts;
  std::shared_ptr<const NoiseModel> nm = noise(point.xi);
  if (point.xi > 0) opts.noise = nm.get();
  opts.device_qubits = routed.device_qubits;
  for (const auto& l : routed.barrier_layouts) {
    std::vector<unsigned> keep;
    for (unsigned q : evo.system) keep.push_back(l[q]);
    opts.keep_per_barrier.push_back(std::move(keep));
  }
  SimulationResult sim = simulate(routed.circuit, DensityMatrix(routed.circuit.width()), opts);
  if (sim.snapshots.size() != r.n_steps + 1) throw std::logic_error("pipeline: snapshot count mismatch");

  const auto traj = oracle(point.gamma, point.dt, r.n_steps);
  for (unsigned k = 0; k <= r.n_steps; ++k) {
    r.times.push_back(point.dt * k);
    r.exact.push_back((*traj)[k].rho);
    std::vector<RealMatrix> ro;
    for (unsigned q : opts.keep_per_barrier[k]) ro.push_back(nm->confusion(routed.device_qubits[q]));
    r.readout.push_back(std::move(ro));
  }
  r.sim = std::move(sim.snapshots);
  return r;
}

ZBasisEstimate z_basis_estimate(std::span<const double> probs, const SpinBosonModel& model) {
  const auto& layout = model.layout();
  const unsigned w = layout.width;
  if (probs.size() != (std::size_t{1} << w)) throw std::invalid_argument("z_basis_estimate: size mismatch");
  const BitCode code = model.truncation().code(model.code());
  std::vector<int> level_of_word(std::size_t{1} << code.width, -1);
  for (unsigned l = 0; l < model.truncation().levels; ++l) level_of_word[code_word(l, code)] = static_cast<int>(l);

  ZBasisEstimate e;
  e.sigma_z.assign(layout.spins.size(), 0.0);
  double zz = 0.0;
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    const double p = probs[idx];
    if (p == 0.0) continue;
    auto bit = [&](unsigned q) { return (idx >> (w - 1 - q)) & 1u; };
    std::uint32_t word = 0;
    for (unsigned q : layout.boson) word = (word << 1) | bit(q);
    // Words outside the code carry no level; they only arise from noise.
    const int level = level_of_word[word];
    e.boson_number += p * std::max(level, 0);
    double prod = 1.0;
    for (std::size_t k = 0; k < layout.spins.size(); ++k) {
      const double s = bit(layout.spins[k]) ? 1.0 : -1.0;
      e.sigma_z[k] += p * s;
      if (k < 2) prod *= s;
    }
    zz += p * prod;
  }
  if (layout.spins.size() == 2) e.czz = zz - e.sigma_z[0] * e.sigma_z[1];
  return e;
}

// ---------------------------------------------------------------------------
// Output

std::string format_csv(const Table& t) {
  std::string out;
  for (std::size_t j = 0; j < t.header.size(); ++j) out += (j ? "," : "") + t.header[j];
  out += '\n';
  char buf[40];
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.size() != t.header.size()) throw std::invalid_argument("csv: row " + std::to_string(r) + " has wrong width");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      if (const auto* d = std::get_if<double>(&row[j])) {
        if (std::isnan(*d)) throw std::domain_error("csv: NaN in row " + std::to_string(r) + ", column " + t.header[j]);
        std::snprintf(buf, sizeof(buf), "%.12g", *d);
        out += buf;
      } else if (const auto* i = std::get_if<long long>(&row[j])) {
        out += std::to_string(*i);
      } else {
        out += std::get<std::string>(row[j]);
      }
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const Table& t, const std::filesystem::path& path) {
  const std::string text = format_csv(t);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

GateCountRow count_step_gates(unsigned n_spins, unsigned levels, int order, CodeKind code,
                              RateConvention convention) {
  ModelParams p;
  p.n_spins = n_spins;
  p.levels = levels;
  p.omega = n_spins == 1 ? 4.0 : 6.0;
  const SpinBosonModel model(p, code);
  const Circuit body =
      assemble_evolution(model, default_initial_state(n_spins), {1, 0.2, order, convention, true});
  const CouplingMap map = CouplingMap::jakarta();
  const RoutedCircuit r = transpile(body, map, choose_layout(body, map));
  return {n_spins, levels, order, code, count_gates(r.circuit)};
}

namespace {

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F&& fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

void check_infidelity(double v, const char* what) {
  if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
    throw std::logic_error(std::string("infidelity out of range for ") + what + ": " + std::to_string(v));
}

Table gate_count_table(const ExperimentConfig& c) {
  struct Item {
    unsigned spins, levels;
    int order;
    CodeKind code;
  };
  std::vector<Item> items;
  for (unsigned s : c.count_spins)
    for (unsigned l : c.count_levels)
      for (int o : c.orders)
        for (CodeKind k : c.count_codes) items.push_back({s, l, o, k});
  const auto rows = parallel_map<GateCountRow>(items.size(), c.threads, [&](std::size_t i) {
    return count_step_gates(items[i].spins, items[i].levels, items[i].order, items[i].code, c.convention);
  });
  Table t{{"n_spins", "d_ho", "order", "code", "single", "cx"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({static_cast<long long>(r.n_spins), static_cast<long long>(r.levels),
                      static_cast<long long>(r.order), std::string(to_string(r.code)),
                      static_cast<long long>(r.counts.single_qubit), static_cast<long long>(r.counts.cx)});
  return t;
}

std::vector<Cell> point_prefix(const PointSpec& p) {
  return {static_cast<long long>(p.order), p.gamma, p.dt, p.xi};
}

}  // namespace

Table run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.kind == ExperimentKind::GateCounts) return gate_count_table(config);

  const CalibrationData cal =
      CalibrationData::load(config.calibration.empty() ? bundled_calibration_path() : config.calibration);
  for (double dt : config.dts) {
    const double n = config.t_final / dt;
    if (std::abs(n - std::round(n)) > 1e-9) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "dt = %g does not divide t_final = %g; running %u steps to t = %.12g", dt,
                    config.t_final, step_count(config.t_final, dt), step_count(config.t_final, dt) * dt);
      log_warning(buf);
    }
  }

  std::vector<PointSpec> points;
  for (int order : config.orders)
    for (double gamma : config.gammas)
      for (double xi : config.xis)
        for (double dt : config.dts) points.push_back({order, gamma, dt, xi});

  Pipeline pipeline(config, cal);
  // Choose layouts up front so workers do not serialize on the search.
  for (int order : config.orders) pipeline.layout(order);
  const auto results =
      parallel_map<PointResult>(points.size(), config.threads, [&](std::size_t i) { return pipeline.run(points[i]); });

  const SpinBosonModel model(config.model, config.code);
  Table t;
  const std::vector<std::string> prefix{"order", "gamma", "dt", "xi"};
  auto header = [&](std::initializer_list<const char*> rest) {
    t.header = prefix;
    for (const char* h : rest) t.header.push_back(h);
  };

  switch (config.kind) {
    case ExperimentKind::TrotterSweep:
    case ExperimentKind::NoiseSweep:
    case ExperimentKind::GammaSweep:
      header({"n_steps", "t_final", "avg_infidelity", "final_infidelity"});
      for (const auto& r : results) {
        auto row = point_prefix(r.spec);
        const double avg = r.average_infidelity();
        const double fin = r.final_infidelity();
        check_infidelity(avg, "average");
        check_infidelity(fin, "final");
        row.insert(row.end(), {static_cast<long long>(r.n_steps), r.times.back(), avg, fin});
        t.rows.push_back(std::move(row));
      }
      break;
    case ExperimentKind::InfidelityVsTime:
      header({"step", "t", "infidelity"});
      for (const auto& r : results) {
        const auto inf = r.infidelities();
        for (std::size_t k = 0; k < inf.size(); ++k) {
          check_infidelity(inf[k], "snapshot");
          auto row = point_prefix(r.spec);
          row.insert(row.end(), {static_cast<long long>(k), r.times[k], inf[k]});
          t.rows.push_back(std::move(row));
        }
      }
      break;
    case ExperimentKind::Observables:
    case ExperimentKind::Correlations: {
      const bool corr = config.kind == ExperimentKind::Correlations;
      if (corr) header({"step", "t", "czz_sim", "czz_exact", "cxx_sim", "cxx_exact"});
      else
        header({"step", "t", "boson_number_sim", "boson_number_exact", "sigma_z_sim", "sigma_z_exact", "sigma_x_sim",
                "sigma_x_exact"});
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        for (std::size_t k = 0; k < r.sim.size(); ++k) {
          const auto& s = r.sim[k];
          const auto& e = r.exact[k];
          std::optional<ZBasisEstimate> est;
          if (config.shots > 0) {
            const std::uint64_t seed = config.seed + 1000003ull * i + k;
            const auto counts = sample_counts(s, config.shots, r.readout[k], seed);
            est = z_basis_estimate(mitigate_readout(counts, r.readout[k]).projected, model);
          }
          auto row = point_prefix(r.spec);
          row.insert(row.end(), {static_cast<long long>(k), r.times[k]});
          if (corr) {
            const double czz = est ? est->czz : connected_correlation(s, model, CorrelationPair::ZZ);
            row.insert(row.end(), {czz, connected_correlation(e, model, CorrelationPair::ZZ),
                                   connected_correlation(s, model, CorrelationPair::XX),
                                   connected_correlation(e, model, CorrelationPair::XX)});
          } else {
            const ObservableSpec n{ObservableKind::BosonNumber, 0};
            const ObservableSpec z{ObservableKind::SigmaZ, 0};
            const ObservableSpec x{ObservableKind::SigmaX, 0};
            row.insert(row.end(), {est ? est->boson_number : expectation(s, model, n), expectation(e, model, n),
                                   est ? est->sigma_z[0] : expectation(s, model, z), expectation(e, model, z),
                                   expectation(s, model, x), expectation(e, model, x)});
          }
          t.rows.push_back(std::move(row));
        }
      }
      break;
    }
    case ExperimentKind::GateCounts: break;
  }
  return t;
}

std::filesystem::path run_and_write(const ExperimentConfig& config) {
  const Table t = run_experiment(config);
  emit_csv(t, config.out);
  std::filesystem::path manifest = config.out;
  manifest.replace_extension(".manifest.json");
  json doc;
  doc["experiment"] = std::string(to_string(config.kind));
  doc["version"] = std::string(kVersion);
  doc["config_hash"] = config.hash();
  doc["rate_convention"] = std::string(to_string(config.convention));
  doc["kernel_isa"] = std::string(kernels::isa_name(kernels::active_isa()));
  doc["calibration"] =
      (config.calibration.empty() ? bundled_calibration_path() : config.calibration).string();
  doc["csv"] = config.out.filename().string();
  doc["rows"] = t.rows.size();
  doc["config"] = json::parse(config.to_json());
  std::ofstream f(manifest);
  if (!f) throw std::runtime_error("cannot write " + manifest.string());
  f << doc.dump(2) << '\n';
  return manifest;
}

}  // namespace sbsim
