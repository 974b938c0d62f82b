#pragma once

#include <vector>

#include "spinstar/collective.hpp"
#include "spinstar/linalg.hpp"

namespace spinstar {

// Single central spin coupled uniformly to a bath of n_bath spin-1/2
// particles. Units: hbar = 1, Boltzmann constant = 1, frequencies angular.
struct ModelConfig {
  double omega0 = 2.0;   // central-spin frequency
  double omega = 2.0;    // bath frequency
  double epsilon = 1.0;  // system-bath coupling
  int n_bath = 1;
  double temperature = 1.0;
  bool bath_interacting = true;
};

enum class Scenario { Local, Global };
enum class CouplingAxis { ZZ, XX };

// Two central spins, each with its own bath (sizes m_bath, n_bath). In the
// Local scenario the central spins do not interact and delta is ignored; in
// the Global scenario they couple with strength delta along coupling_axis.
struct TwoQubitConfig {
  double omega1 = 3.0, omega2 = 3.1;
  double omega_a = 2.0, omega_b = 2.1;
  double eps1 = 2.4, eps2 = 2.5;
  double delta = 4.0;
  int m_bath = 1, n_bath = 1;
  double temperature = 1.0;
  bool bath_interacting = true;
  Scenario scenario = Scenario::Global;
  CouplingAxis coupling_axis = CouplingAxis::ZZ;
};

// One collective-sector block of a model Hamiltonian. dims lists the tensor
// factors in order: system qubits first, then bath sector spaces.
struct SectorHamiltonian {
  std::vector<SectorSpec> sector_labels;
  DenseMatrix h;
  std::vector<int> dims;
};

void validate(const ModelConfig& cfg);
void validate(const TwoQubitConfig& cfg);

// H = (omega0/2) sz x I + I x H_E + (eps/sqrt(N)) (sx x Jx + sy x Jy)
// on qubit (x) bath-sector, with H_E = omega (J+J-/N - I/2) for an
// interacting bath and (omega/N) Jz otherwise.
SectorHamiltonian single_qubit_sector_h(const ModelConfig& cfg,
                                        const SectorSpec& sector);

// Global two-qubit block on qubit1 (x) qubit2 (x) sector1 (x) sector2.
SectorHamiltonian two_qubit_global_sector_h(const TwoQubitConfig& cfg,
                                            const SectorSpec& s1,
                                            const SectorSpec& s2);

// Full 2^(spins) Hamiltonian assembled literally from per-spin Pauli
// operators, with every pairwise bath term written out. Validation oracle
// only; capped at 14 spins total.
DenseMatrix bruteforce_full_h(const ModelConfig& cfg);
DenseMatrix bruteforce_full_h(const TwoQubitConfig& cfg);

// Bath-only Pauli-sum Hamiltonian on 2^n spins (used by the thermal-state
// reference).
DenseMatrix bruteforce_bath_h(int n, double omega, bool interacting);

}  // namespace spinstar
