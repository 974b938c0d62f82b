#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinstar/measures.hpp"

namespace spinstar {

enum class ExperimentKind {
  SigmaZ,
  TraceDistanceSingle,
  TraceDistanceTwoGlobal,
  TraceDistanceTwoLocal,
  EntropySingle,
  EntropyTwo,
  QslSweepEpsilon,
  QslSweepTau,
  CorrelationsTimeLocal,
  CorrelationsTimeGlobal,
  CorrelationsSweepDelta,
  ConcurrenceCouplingAxis,
};

struct GridSpec {
  double start = 0.0;
  double stop = 10.0;
  int points = 500;
};

enum class InitialState { Ket1, Ket11, BellPhiPlus };

// Full description of one experiment run. Single-qubit kinds read the
// `single` block; two-qubit kinds read `two` (local kinds derive the per-spin
// bath parameters from it: spin A gets omega1/omega_a/eps1/m_bath, spin B
// gets omega2/omega_b/eps2/n_bath).
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::SigmaZ;
  ModelConfig single;
  TwoQubitConfig two;
  GridSpec grid;
  InitialState initial_state = InitialState::Ket1;
  bool initial_state_given = false;
  std::string output_path = "out.csv";

  bool flip_sigma_z = false;        // report +<sigma_z> convention instead
  LogBase entropy_base = LogBase::Natural;
  MeasuredSide discord_side = MeasuredSide::Q;
  double tau = 1.0;                 // driving time for epsilon/delta sweeps
  int quad_points = 1000;           // quadrature intervals for sweep kinds
  int oversample = 25;              // dense-grid factor for the tau sweep
};

ExperimentKind experiment_kind_from_name(const std::string& name);
std::string experiment_kind_name(ExperimentKind kind);

// (name, one-line description) for every kind.
std::vector<std::pair<std::string, std::string>> experiment_catalog();

// Flat key=value file, '#' comments. Throws ConfigError on unknown keys or
// malformed values.
ExperimentSpec parse_spec_file(const std::string& path);

// Apply a single key=value override on top of a parsed spec.
void apply_override(ExperimentSpec& spec, const std::string& key,
                    const std::string& value);

// Caps and structural checks; throws ConfigError / CapExceededError.
void validate_spec(const ExperimentSpec& spec);

// Executes the experiment and writes its CSV. Returns the path written.
std::string run(const ExperimentSpec& spec);

}  // namespace spinstar
