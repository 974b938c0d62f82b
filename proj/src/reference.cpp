#include "spinstar/reference.hpp"

#include <cmath>

namespace spinstar {
namespace reference {

namespace {

// rho_SE(t) in the eigenbasis phase picture, traced down to the kept system
// factors.
Trajectory evolve_joint(const DenseMatrix& h, const DenseMatrix& rho_joint,
                        const std::vector<int>& dims,
                        const std::vector<int>& keep,
                        const std::vector<double>& times) {
  const EigDecomposition eig = hermitian_eig(h, 1e-9);
  const DenseMatrix& v = eig.eigenvectors;
  const DenseMatrix a = v.adjoint() * rho_joint * v;
  const Eigen::Index dim = h.rows();

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  for (double t : times) {
    const ComplexVector phase =
        (Complex(0, -1) * t * eig.eigenvalues.array().cast<Complex>())
            .exp()
            .matrix();
    const DenseMatrix b =
        phase.asDiagonal() * a * phase.conjugate().asDiagonal();
    DenseMatrix rho_t(dim, dim);
    rho_t.noalias() = v * b * v.adjoint();
    traj.states.push_back(partial_trace(rho_t, dims, keep));
  }
  return traj;
}

}  // namespace

DenseMatrix thermal_state(const DenseMatrix& h, double temperature) {
  if (temperature <= 0)
    throw NonPositiveTemperatureError("temperature must be positive");
  const EigDecomposition eig = hermitian_eig(h, 1e-9);
  RealVector w =
      (-eig.eigenvalues.array() / temperature).exp().matrix();
  const double z = w.sum();
  return eig.eigenvectors * (w / z).cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

double partition_function(const DenseMatrix& h, double temperature) {
  if (temperature <= 0)
    throw NonPositiveTemperatureError("temperature must be positive");
  const EigDecomposition eig = hermitian_eig(h, 1e-9);
  return (-eig.eigenvalues.array() / temperature).exp().sum();
}

Trajectory evolve_single(const ModelConfig& cfg, const DenseMatrix& rho0,
                         const std::vector<double>& times) {
  require_density_matrix(rho0);
  const DenseMatrix h = bruteforce_full_h(cfg);
  const DenseMatrix h_env =
      bruteforce_bath_h(cfg.n_bath, cfg.omega, cfg.bath_interacting);
  const DenseMatrix rho_joint =
      kron(rho0, thermal_state(h_env, cfg.temperature));
  return evolve_joint(h, rho_joint, {2, 1 << cfg.n_bath}, {0}, times);
}

Trajectory evolve_two_qubit_global(const TwoQubitConfig& cfg,
                                   const DenseMatrix& rho0,
                                   const std::vector<double>& times) {
  require_density_matrix(rho0);
  const DenseMatrix h = bruteforce_full_h(cfg);
  const DenseMatrix env1 = thermal_state(
      bruteforce_bath_h(cfg.m_bath, cfg.omega_a, cfg.bath_interacting),
      cfg.temperature);
  const DenseMatrix env2 = thermal_state(
      bruteforce_bath_h(cfg.n_bath, cfg.omega_b, cfg.bath_interacting),
      cfg.temperature);
  const DenseMatrix rho_joint = kron(kron(rho0, env1), env2);
  return evolve_joint(h, rho_joint,
                      {4, 1 << cfg.m_bath, 1 << cfg.n_bath}, {0}, times);
}

std::vector<double> joint_energy(const ModelConfig& cfg,
                                 const DenseMatrix& rho0,
                                 const std::vector<double>& times) {
  const DenseMatrix h = bruteforce_full_h(cfg);
  const DenseMatrix h_env =
      bruteforce_bath_h(cfg.n_bath, cfg.omega, cfg.bath_interacting);
  const DenseMatrix rho_joint =
      kron(rho0, thermal_state(h_env, cfg.temperature));
  const EigDecomposition eig = hermitian_eig(h, 1e-9);
  const DenseMatrix& v = eig.eigenvectors;
  const DenseMatrix a = v.adjoint() * rho_joint * v;

  std::vector<double> energies;
  energies.reserve(times.size());
  for (double t : times) {
    const ComplexVector phase =
        (Complex(0, -1) * t * eig.eigenvalues.array().cast<Complex>())
            .exp()
            .matrix();
    const DenseMatrix b =
        phase.asDiagonal() * a * phase.conjugate().asDiagonal();
    // Tr(H rho) in the eigenbasis is sum_e lambda_e b_ee.
    energies.push_back(
        (eig.eigenvalues.array() * b.diagonal().real().array()).sum());
  }
  return energies;
}

}  // namespace reference
}  // namespace spinstar
