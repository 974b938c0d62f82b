#pragma once

#include "spinstar/dynamics.hpp"

namespace spinstar {
// Serial full-tensor-product reference implementations. These evolve the
// joint system-bath state on the complete 2^(spins) space, with the
// Hamiltonian assembled from per-spin Pauli operators and the thermal bath
// state obtained by exponentiating the full bath Hamiltonian. Used by the
// test suites and the benchmark as an independent check on the
// sector-decomposed production path. Capped at 14 spins.
namespace reference {

// exp(-h/T) / Tr exp(-h/T)
DenseMatrix thermal_state(const DenseMatrix& h, double temperature);

double partition_function(const DenseMatrix& h, double temperature);

Trajectory evolve_single(const ModelConfig& cfg, const DenseMatrix& rho0,
                         const std::vector<double>& times);

Trajectory evolve_two_qubit_global(const TwoQubitConfig& cfg,
                                   const DenseMatrix& rho0,
                                   const std::vector<double>& times);

// Tr(H rho_SE(t)) along the joint evolution; constant for a closed system.
std::vector<double> joint_energy(const ModelConfig& cfg,
                                 const DenseMatrix& rho0,
                                 const std::vector<double>& times);

}  // namespace reference
}  // namespace spinstar
