#include "spinstar/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace spinstar {

namespace {

constexpr int kSingleBathCap = 200;
constexpr int kGlobalBathCap = 20;

const std::map<std::string, ExperimentKind>& kind_names() {
  static const std::map<std::string, ExperimentKind> names = {
      {"sigma_z", ExperimentKind::SigmaZ},
      {"trace_distance_single", ExperimentKind::TraceDistanceSingle},
      {"trace_distance_two_global", ExperimentKind::TraceDistanceTwoGlobal},
      {"trace_distance_two_local", ExperimentKind::TraceDistanceTwoLocal},
      {"entropy_single", ExperimentKind::EntropySingle},
      {"entropy_two", ExperimentKind::EntropyTwo},
      {"qsl_sweep_epsilon", ExperimentKind::QslSweepEpsilon},
      {"qsl_sweep_tau", ExperimentKind::QslSweepTau},
      {"correlations_time_local", ExperimentKind::CorrelationsTimeLocal},
      {"correlations_time_global", ExperimentKind::CorrelationsTimeGlobal},
      {"correlations_sweep_delta", ExperimentKind::CorrelationsSweepDelta},
      {"concurrence_coupling_axis", ExperimentKind::ConcurrenceCouplingAxis},
  };
  return names;
}

std::vector<double> linspace(double start, double stop, int points) {
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k)
    out[k] = start + (stop - start) * k / (points - 1);
  return out;
}

bool is_two_qubit(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::SigmaZ:
    case ExperimentKind::TraceDistanceSingle:
    case ExperimentKind::EntropySingle:
    case ExperimentKind::QslSweepEpsilon:
    case ExperimentKind::QslSweepTau:
      return false;
    default:
      return true;
  }
}

// EntropyTwo switches between scenarios via the spec; the other two-qubit
// kinds are fixed by their kind.
bool uses_local_maps(const ExperimentSpec& spec) {
  if (spec.kind == ExperimentKind::TraceDistanceTwoLocal ||
      spec.kind == ExperimentKind::CorrelationsTimeLocal)
    return true;
  return spec.kind == ExperimentKind::EntropyTwo &&
         spec.two.scenario == Scenario::Local;
}

InitialState default_initial_state(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::CorrelationsTimeLocal:
    case ExperimentKind::CorrelationsTimeGlobal:
    case ExperimentKind::CorrelationsSweepDelta:
      return InitialState::BellPhiPlus;
    default:
      return is_two_qubit(kind) ? InitialState::Ket11 : InitialState::Ket1;
  }
}

ComplexVector initial_ket(InitialState state) {
  switch (state) {
    case InitialState::Ket1: {
      ComplexVector v = ComplexVector::Zero(2);
      v(1) = 1.0;
      return v;
    }
    case InitialState::Ket11: {
      ComplexVector v = ComplexVector::Zero(4);
      v(3) = 1.0;
      return v;
    }
    case InitialState::BellPhiPlus: {
      ComplexVector v = ComplexVector::Zero(4);
      v(0) = v(3) = 1.0 / std::sqrt(2.0);
      return v;
    }
  }
  throw ConfigError("unknown initial state");
}

std::string initial_state_name(InitialState s) {
  switch (s) {
    case InitialState::Ket1:
      return "ket1";
    case InitialState::Ket11:
      return "ket11";
    case InitialState::BellPhiPlus:
      return "bell_phi_plus";
  }
  return "?";
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

double parse_double(const std::string& v) {
  std::size_t pos = 0;
  double d;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError("trailing junk in number '" + v + "'");
  return d;
}

int parse_int(const std::string& v) {
  const double d = parse_double(v);
  const int i = static_cast<int>(std::lround(d));
  if (d != i) throw ConfigError("expected an integer, got '" + v + "'");
  return i;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Per-spin configs of the local scenario.
ModelConfig local_cfg_a(const TwoQubitConfig& two) {
  return {two.omega1, two.omega_a, two.eps1, two.m_bath, two.temperature,
          two.bath_interacting};
}

ModelConfig local_cfg_b(const TwoQubitConfig& two) {
  return {two.omega2, two.omega_b, two.eps2, two.n_bath, two.temperature,
          two.bath_interacting};
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw Error("cannot open output file '" + path + "'");
  }

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }

  void row(const std::vector<double>& vals) {
    char buf[32];
    for (std::size_t i = 0; i < vals.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", vals[i]);
      out_ << (i ? "," : "") << buf;
    }
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

double sigma_z_expectation(const DenseMatrix& rho) {
  return std::real((rho * pauli_z()).trace());
}

Trajectory evolve_for(const ExperimentSpec& spec, bool interacting,
                      const std::vector<double>& times,
                      const EvolveOptions& opts = {}) {
  const ComplexVector psi = initial_ket(spec.initial_state);
  const DenseMatrix rho0 = ket_density(psi);
  if (!is_two_qubit(spec.kind)) {
    ModelConfig cfg = spec.single;
    cfg.bath_interacting = interacting;
    return evolve_single(cfg, rho0, times, opts);
  }
  TwoQubitConfig two = spec.two;
  two.bath_interacting = interacting;
  if (uses_local_maps(spec))
    return evolve_two_qubit_local(local_cfg_a(two), local_cfg_b(two), rho0,
                                  times, opts);
  return evolve_two_qubit_global(two, rho0, times, opts);
}

void write_trace_distance(const ExperimentSpec& spec,
                          const std::string& path) {
  const std::vector<double> times =
      linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
  const Trajectory on = evolve_for(spec, true, times);
  const Trajectory off = evolve_for(spec, false, times);
  CsvWriter csv(path);
  csv.header({"t", "trace_distance"});
  for (std::size_t k = 0; k < times.size(); ++k)
    csv.row({times[k], trace_distance(on.states[k], off.states[k])});
}

void write_entropy(const ExperimentSpec& spec, const std::string& path) {
  const std::vector<double> times =
      linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
  const Trajectory on = evolve_for(spec, true, times);
  const Trajectory off = evolve_for(spec, false, times);
  CsvWriter csv(path);
  csv.header({"t", "entropy_interacting", "entropy_noninteracting"});
  for (std::size_t k = 0; k < times.size(); ++k)
    csv.row({times[k],
             von_neumann_entropy(on.states[k], spec.entropy_base),
             von_neumann_entropy(off.states[k], spec.entropy_base)});
}

void write_correlations_time(const ExperimentSpec& spec,
                             const std::string& path) {
  const std::vector<double> times =
      linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
  const Trajectory traj = evolve_for(spec, spec.two.bath_interacting, times,
                                     {.with_generators = true});
  const ComplexVector psi = initial_ket(spec.initial_state);
  const std::vector<QslResult> qsl = qsl_sweep(traj, psi);

  std::vector<double> conc(times.size()), disc(times.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < times.size(); ++k) {
    conc[k] = concurrence(traj.states[k]);
    disc[k] = quantum_discord(traj.states[k], spec.discord_side).discord;
  }

  CsvWriter csv(path);
  csv.header({"t", "tau_qsl", "concurrence", "discord"});
  for (std::size_t k = 0; k < times.size(); ++k)
    csv.row({times[k], qsl[k].tau_qsl, conc[k], disc[k]});
}

}  // namespace

ExperimentKind experiment_kind_from_name(const std::string& name) {
  const auto it = kind_names().find(name);
  if (it == kind_names().end())
    throw ConfigError("unknown experiment kind '" + name + "'");
  return it->second;
}

std::string experiment_kind_name(ExperimentKind kind) {
  for (const auto& [name, k] : kind_names())
    if (k == kind) return name;
  return "?";
}

std::vector<std::pair<std::string, std::string>> experiment_catalog() {
  return {
      {"sigma_z", "spin excitation <sigma_z>(t) of the single central spin"},
      {"trace_distance_single",
       "trace distance between interacting- and non-interacting-bath single-"
       "qubit states"},
      {"trace_distance_two_global",
       "same comparison for the two-qubit global bath scenario"},
      {"trace_distance_two_local",
       "same comparison for the two-qubit local bath scenario"},
      {"entropy_single",
       "von Neumann entropy of the single central spin, both bath variants"},
      {"entropy_two",
       "von Neumann entropy of the two-qubit system, both bath variants"},
      {"qsl_sweep_epsilon",
       "single-qubit QSL time vs system-bath coupling epsilon"},
      {"qsl_sweep_tau", "single-qubit QSL time vs driving time tau"},
      {"correlations_time_local",
       "QSL time, concurrence and discord vs time, local bath scenario"},
      {"correlations_time_global",
       "QSL time, concurrence and discord vs time, global bath scenario"},
      {"correlations_sweep_delta",
       "QSL time, concurrence and discord vs central spin-spin coupling"},
      {"concurrence_coupling_axis",
       "concurrence vs time for the chosen central spin-spin coupling axis"},
  };
}

void apply_override(ExperimentSpec& spec, const std::string& key,
                    const std::string& value) {
  if (key == "kind") {
    spec.kind = experiment_kind_from_name(value);
    if (!spec.initial_state_given)
      spec.initial_state = default_initial_state(spec.kind);
  } else if (key == "omega0") {
    spec.single.omega0 = parse_double(value);
  } else if (key == "omega") {
    spec.single.omega = parse_double(value);
  } else if (key == "epsilon") {
    spec.single.epsilon = parse_double(value);
  } else if (key == "n_bath") {
    spec.single.n_bath = parse_int(value);
    spec.two.n_bath = spec.single.n_bath;
  } else if (key == "m_bath") {
    spec.two.m_bath = parse_int(value);
  } else if (key == "temperature") {
    spec.single.temperature = parse_double(value);
    spec.two.temperature = spec.single.temperature;
  } else if (key == "bath_interacting") {
    spec.single.bath_interacting = parse_bool(value);
    spec.two.bath_interacting = spec.single.bath_interacting;
  } else if (key == "omega1") {
    spec.two.omega1 = parse_double(value);
  } else if (key == "omega2") {
    spec.two.omega2 = parse_double(value);
  } else if (key == "omega_a") {
    spec.two.omega_a = parse_double(value);
  } else if (key == "omega_b") {
    spec.two.omega_b = parse_double(value);
  } else if (key == "eps1") {
    spec.two.eps1 = parse_double(value);
  } else if (key == "eps2") {
    spec.two.eps2 = parse_double(value);
  } else if (key == "delta") {
    spec.two.delta = parse_double(value);
  } else if (key == "scenario") {
    if (value == "local")
      spec.two.scenario = Scenario::Local;
    else if (value == "global")
      spec.two.scenario = Scenario::Global;
    else
      throw ConfigError("scenario must be local or global");
  } else if (key == "coupling_axis") {
    if (value == "zz")
      spec.two.coupling_axis = CouplingAxis::ZZ;
    else if (value == "xx")
      spec.two.coupling_axis = CouplingAxis::XX;
    else
      throw ConfigError("coupling_axis must be zz or xx");
  } else if (key == "grid_start") {
    spec.grid.start = parse_double(value);
  } else if (key == "grid_stop") {
    spec.grid.stop = parse_double(value);
  } else if (key == "grid_points") {
    spec.grid.points = parse_int(value);
  } else if (key == "initial_state") {
    if (value == "ket1")
      spec.initial_state = InitialState::Ket1;
    else if (value == "ket11")
      spec.initial_state = InitialState::Ket11;
    else if (value == "bell_phi_plus")
      spec.initial_state = InitialState::BellPhiPlus;
    else
      throw ConfigError("unknown initial_state '" + value + "'");
    spec.initial_state_given = true;
  } else if (key == "output") {
    spec.output_path = value;
  } else if (key == "flip_sigma_z") {
    spec.flip_sigma_z = parse_bool(value);
  } else if (key == "entropy_base") {
    if (value == "natural")
      spec.entropy_base = LogBase::Natural;
    else if (value == "two")
      spec.entropy_base = LogBase::Two;
    else
      throw ConfigError("entropy_base must be natural or two");
  } else if (key == "measure_side") {
    if (value == "q")
      spec.discord_side = MeasuredSide::Q;
    else if (value == "p")
      spec.discord_side = MeasuredSide::P;
    else
      throw ConfigError("measure_side must be p or q");
  } else if (key == "tau") {
    spec.tau = parse_double(value);
  } else if (key == "quad_points") {
    spec.quad_points = parse_int(value);
  } else if (key == "oversample") {
    spec.oversample = parse_int(value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

ExperimentSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read spec file '" + path + "'");
  ExperimentSpec spec;
  bool kind_seen = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind") kind_seen = true;
    apply_override(spec, key, value);
  }
  if (!kind_seen) throw ConfigError(path + ": missing 'kind'");
  return spec;
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.grid.points < 2) throw ConfigError("grid_points must be >= 2");
  if (!(spec.grid.start < spec.grid.stop))
    throw ConfigError("grid_start must be below grid_stop");
  if (spec.quad_points < 1) throw ConfigError("quad_points must be >= 1");
  if (spec.oversample < 1) throw ConfigError("oversample must be >= 1");
  if (spec.tau <= 0) throw ConfigError("tau must be positive");

  const bool two_qubit = is_two_qubit(spec.kind);
  if (!two_qubit || uses_local_maps(spec)) {
    const int n_max = two_qubit ? std::max(spec.two.m_bath, spec.two.n_bath)
                                : spec.single.n_bath;
    if (n_max > kSingleBathCap)
      throw CapExceededError("bath size exceeds the single-bath cap of " +
                             std::to_string(kSingleBathCap));
  } else {
    if (spec.two.m_bath > kGlobalBathCap || spec.two.n_bath > kGlobalBathCap)
      throw CapExceededError("bath size exceeds the global-scenario cap of " +
                             std::to_string(kGlobalBathCap));
  }

  const ComplexVector psi = initial_ket(spec.initial_state);
  const int want = two_qubit ? 4 : 2;
  if (psi.size() != want)
    throw ConfigError("initial_state " + initial_state_name(spec.initial_state) +
                      " has the wrong dimension for " +
                      experiment_kind_name(spec.kind));
}

std::string run(const ExperimentSpec& spec) {
  validate_spec(spec);
  const std::string path = spec.output_path;

  switch (spec.kind) {
    case ExperimentKind::SigmaZ: {
      const std::vector<double> times =
          linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
      const Trajectory traj =
          evolve_for(spec, spec.single.bath_interacting, times);
      const double sign = spec.flip_sigma_z ? -1.0 : 1.0;
      CsvWriter csv(path);
      csv.header({"t", "sigma_z"});
      for (std::size_t k = 0; k < times.size(); ++k)
        csv.row({times[k], sign * sigma_z_expectation(traj.states[k])});
      break;
    }

    case ExperimentKind::TraceDistanceSingle:
    case ExperimentKind::TraceDistanceTwoGlobal:
    case ExperimentKind::TraceDistanceTwoLocal:
      write_trace_distance(spec, path);
      break;

    case ExperimentKind::EntropySingle:
    case ExperimentKind::EntropyTwo:
      write_entropy(spec, path);
      break;

    case ExperimentKind::QslSweepEpsilon: {
      const std::vector<double> eps_grid =
          linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
      const std::vector<double> times =
          linspace(0.0, spec.tau, spec.quad_points + 1);
      const ComplexVector psi = initial_ket(spec.initial_state);
      const DenseMatrix rho0 = ket_density(psi);
      std::vector<double> tau_qsl(eps_grid.size());
#pragma omp parallel for schedule(dynamic)
      for (std::size_t k = 0; k < eps_grid.size(); ++k) {
        ModelConfig cfg = spec.single;
        cfg.epsilon = eps_grid[k];
        const Trajectory traj =
            evolve_single(cfg, rho0, times, {.with_generators = true});
        tau_qsl[k] = qsl_time(traj, psi, spec.tau).tau_qsl;
      }
      CsvWriter csv(path);
      csv.header({"epsilon", "tau_qsl"});
      for (std::size_t k = 0; k < eps_grid.size(); ++k)
        csv.row({eps_grid[k], tau_qsl[k]});
      break;
    }

    case ExperimentKind::QslSweepTau: {
      if (std::abs(spec.grid.start) > 1e-12)
        throw ConfigError("qsl_sweep_tau requires grid_start = 0");
      const int dense_points = (spec.grid.points - 1) * spec.oversample + 1;
      const std::vector<double> times =
          linspace(0.0, spec.grid.stop, dense_points);
      const ComplexVector psi = initial_ket(spec.initial_state);
      const Trajectory traj = evolve_single(
          spec.single, ket_density(psi), times, {.with_generators = true});
      const std::vector<QslResult> qsl = qsl_sweep(traj, psi);
      CsvWriter csv(path);
      csv.header({"tau", "tau_qsl"});
      for (int k = 0; k < spec.grid.points; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k) * spec.oversample;
        csv.row({times[idx], qsl[idx].tau_qsl});
      }
      break;
    }

    case ExperimentKind::CorrelationsTimeLocal:
    case ExperimentKind::CorrelationsTimeGlobal:
      if (std::abs(spec.grid.start) > 1e-12)
        throw ConfigError("correlation-time experiments require grid_start = 0");
      write_correlations_time(spec, path);
      break;

    case ExperimentKind::CorrelationsSweepDelta: {
      const std::vector<double> delta_grid =
          linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
      const std::vector<double> times =
          linspace(0.0, spec.tau, spec.quad_points + 1);
      const ComplexVector psi = initial_ket(spec.initial_state);
      const DenseMatrix rho0 = ket_density(psi);
      std::vector<double> tau_qsl(delta_grid.size()), conc(delta_grid.size()),
          disc(delta_grid.size());
#pragma omp parallel for schedule(dynamic)
      for (std::size_t k = 0; k < delta_grid.size(); ++k) {
        TwoQubitConfig cfg = spec.two;
        cfg.delta = delta_grid[k];
        const Trajectory traj = evolve_two_qubit_global(
            cfg, rho0, times, {.with_generators = true});
        tau_qsl[k] = qsl_time(traj, psi, spec.tau).tau_qsl;
        conc[k] = concurrence(traj.states.back());
        disc[k] = quantum_discord(traj.states.back(), spec.discord_side).discord;
      }
      CsvWriter csv(path);
      csv.header({"delta", "tau_qsl", "concurrence", "discord"});
      for (std::size_t k = 0; k < delta_grid.size(); ++k)
        csv.row({delta_grid[k], tau_qsl[k], conc[k], disc[k]});
      break;
    }

    case ExperimentKind::ConcurrenceCouplingAxis: {
      const std::vector<double> times =
          linspace(spec.grid.start, spec.grid.stop, spec.grid.points);
      const ComplexVector psi = initial_ket(spec.initial_state);
      const Trajectory traj =
          evolve_two_qubit_global(spec.two, ket_density(psi), times);
      CsvWriter csv(path);
      csv.header({"t", "concurrence"});
      for (std::size_t k = 0; k < times.size(); ++k)
        csv.row({times[k], concurrence(traj.states[k])});
      break;
    }
  }
  return path;
}

}  // namespace spinstar
