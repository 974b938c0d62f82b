#pragma once

#include "spinstar/dynamics.hpp"

namespace spinstar {

// 1/2 sum |eigenvalues(rho1 - rho2)|
double trace_distance(const DenseMatrix& rho1, const DenseMatrix& rho2);

enum class LogBase { Natural, Two };

// -sum lambda log lambda, with 0 log 0 = 0 and eigenvalues in [-1e-9, 0)
// clipped to zero.
double von_neumann_entropy(const DenseMatrix& rho,
                           LogBase base = LogBase::Natural);

// Quantum-speed-limit evaluation for one (initial state, driving time) pair:
// Bures angle from <psi0|rho_tau|psi0>, the three time-averaged generator
// norms, and tau_qsl = max{1/L_op, 1/L_tr, 1/L_hs} sin^2(B).
struct QslResult {
  double tau = 0.0;
  double bures_angle = 0.0;
  double lambda_op = 0.0, lambda_hs = 0.0, lambda_tr = 0.0;
  double tau_qsl = 0.0;
};

// traj must cover [0, tau] on a uniform grid, carry generators, and start at
// the pure state |psi0><psi0|. Norm integrals use composite trapezoidal
// quadrature on the grid.
QslResult qsl_time(const Trajectory& traj, const ComplexVector& psi0,
                   double tau);

// QslResult at every grid point tau = t_k of a uniform trajectory, sharing
// one pass of cumulative quadrature. Entry 0 (tau = 0) is all zeros.
std::vector<QslResult> qsl_sweep(const Trajectory& traj,
                                 const ComplexVector& psi0);

// Wootters concurrence of a two-qubit state.
double concurrence(const DenseMatrix& rho);

enum class MeasuredSide { P, Q };

struct DiscordResult {
  double discord = 0.0;           // bits
  double optimal_theta = 0.0;
  double optimal_phi = 0.0;
  double grid_value = 0.0;        // conditional entropy before refinement
};

// Quantum discord of a two-qubit state with projective measurements on the
// given subsystem (Q = second qubit by default). The conditional entropy is
// minimized over a 61x121 (theta, phi) grid followed by coordinate-wise
// golden-section refinement.
DiscordResult quantum_discord(const DenseMatrix& rho,
                              MeasuredSide side = MeasuredSide::Q);

}  // namespace spinstar
