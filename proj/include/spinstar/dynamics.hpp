#pragma once

#include <vector>

#include "spinstar/models.hpp"

namespace spinstar {

// Thermal description of one bath: per-sector Boltzmann factors for every
// |j,m> eigenstate of the bath Hamiltonian, plus the multiplicity-weighted
// partition function.
struct BathSpec {
  double omega = 2.0;
  int n_spins = 1;
  bool interacting = true;
  double temperature = 1.0;
};

BathSpec bath_of(const ModelConfig& cfg);
BathSpec first_bath_of(const TwoQubitConfig& cfg);
BathSpec second_bath_of(const TwoQubitConfig& cfg);

struct ThermalWeights {
  std::vector<SectorSpec> sector_list;
  // weights[s][row] = exp(-E_{j,m}/T), rows in m-descending order, matching
  // the collective-operator basis.
  std::vector<std::vector<double>> weights;
  double partition_function = 0.0;
};

// Bath eigenenergy of |j,m>: omega((j(j+1) - m(m-1))/N - 1/2) for an
// interacting bath, (omega/N) m otherwise. Arguments are 2j and 2m.
double bath_level_energy(const BathSpec& bath, int two_j, int two_m);

ThermalWeights thermal_weights(const BathSpec& bath);

// Time grid plus reduced density matrices along it; generators (d rho/dt)
// are filled only when requested.
struct Trajectory {
  std::vector<double> times;
  std::vector<DenseMatrix> states;
  std::vector<DenseMatrix> generators;
};

struct EvolveOptions {
  bool with_generators = false;
  // When false, skips the per-state positivity diagnostic (the checks live in
  // the test suites anyway; experiment runs keep them on).
  bool check_states = true;
};

// Reduced dynamics of the single central spin: one eigendecomposition per
// collective sector, phase evolution in the eigenbasis, bath partial trace,
// multiplicity/Z-weighted sector sum.
Trajectory evolve_single(const ModelConfig& cfg, const DenseMatrix& rho0,
                         const std::vector<double>& times,
                         const EvolveOptions& opts = {});

// Same spectral scheme with a double sector sum over both baths.
Trajectory evolve_two_qubit_global(const TwoQubitConfig& cfg,
                                   const DenseMatrix& rho0,
                                   const std::vector<double>& times,
                                   const EvolveOptions& opts = {});

// 4x4 matrix of the single-qubit dynamical map acting on row-major
// column-stacked density matrices: vec(rho)_r with r = 2a + b for rho_{ab}.
struct QubitSuperoperator {
  Eigen::Matrix4cd mat = Eigen::Matrix4cd::Identity();
  DenseMatrix apply(const DenseMatrix& rho) const;
};

QubitSuperoperator qubit_map(const ModelConfig& cfg, double t);

// Maps (and optionally their time derivatives) along a whole grid, sharing
// the per-sector eigendecompositions across times.
struct MapTrajectory {
  std::vector<double> times;
  std::vector<QubitSuperoperator> maps;
  std::vector<QubitSuperoperator> derivatives;
};

MapTrajectory qubit_map_trajectory(const ModelConfig& cfg,
                                   const std::vector<double>& times,
                                   bool with_derivatives = false);

// Local bath scenario: rho_AB(t) = (Lambda_A (x) Lambda_B) rho_AB(0).
Trajectory evolve_two_qubit_local(const ModelConfig& cfg_a,
                                  const ModelConfig& cfg_b,
                                  const DenseMatrix& rho0,
                                  const std::vector<double>& times,
                                  const EvolveOptions& opts = {});

// Product-map application on a two-qubit state, consistent with the row-major
// stacking convention.
DenseMatrix apply_local_product(const QubitSuperoperator& map_a,
                                const QubitSuperoperator& map_b,
                                const DenseMatrix& rho);

}  // namespace spinstar
