#include "spinstar/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace spinstar {

namespace {

double clipped_entropy(const RealVector& eigenvalues, LogBase base) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    double lam = eigenvalues(i);
    if (lam < -1e-9)
      throw InvalidStateError("entropy: eigenvalue below -1e-9");
    if (lam <= 0.0) continue;
    s -= lam * std::log(lam);
  }
  return base == LogBase::Two ? s / std::log(2.0) : s;
}

double entropy2(const DenseMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho);
  return clipped_entropy(solver.eigenvalues(), LogBase::Two);
}

// Spectral square root with eigenvalues clipped at zero.
DenseMatrix psd_sqrt(const DenseMatrix& a) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(a);
  RealVector s = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * s.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

void require_uniform(const std::vector<double>& times) {
  if (times.size() < 2) throw ConfigError("qsl: need at least two grid points");
  if (std::abs(times.front()) > 1e-12)
    throw ConfigError("qsl: time grid must start at 0");
  const double dt = times[1] - times[0];
  for (std::size_t k = 1; k < times.size(); ++k)
    if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * std::max(1.0, dt))
      throw ConfigError("qsl: time grid must be uniform");
}

void require_pure_start(const Trajectory& traj, const ComplexVector& psi0) {
  if (std::abs(psi0.norm() - 1.0) > 1e-8)
    throw InvalidStateError("qsl: psi0 is not normalized");
  if ((traj.states.front() - ket_density(psi0)).cwiseAbs().maxCoeff() > 1e-8)
    throw InvalidStateError(
        "qsl: trajectory does not start at the pure state |psi0><psi0|");
}

double qsl_from(double bures_angle, double lambda_op, double lambda_tr,
                double lambda_hs) {
  const double sin2 = std::sin(bures_angle) * std::sin(bures_angle);
  // Displacements at the fidelity noise floor mean the state has not moved;
  // dividing them by equally tiny averaged norms would produce junk.
  if (sin2 <= 1e-12) return 0.0;
  double best = 0.0;
  for (double lam : {lambda_op, lambda_tr, lambda_hs})
    if (lam > 0.0) best = std::max(best, 1.0 / lam);
  return best * sin2;
}

double bures_angle_of(const DenseMatrix& rho, const ComplexVector& psi0) {
  double f = std::real((psi0.adjoint() * rho * psi0)(0, 0));
  f = std::clamp(f, 0.0, 1.0);
  return std::acos(std::sqrt(f));
}

// Measurement kets on the probed qubit.
ComplexVector u_ket(double theta, double phi) {
  ComplexVector u(2);
  u << std::cos(theta), std::exp(Complex(0, phi)) * std::sin(theta);
  return u;
}

ComplexVector v_ket(double theta, double phi) {
  ComplexVector v(2);
  v << std::sin(theta), -std::exp(Complex(0, phi)) * std::cos(theta);
  return v;
}

// sum_j p_j S(rho_P | M_j), measurement on the second qubit, base two.
double conditional_entropy(const DenseMatrix& rho, double theta, double phi) {
  double s = 0.0;
  for (const ComplexVector& ket : {u_ket(theta, phi), v_ket(theta, phi)}) {
    const DenseMatrix proj = kron(identity(2), ket_density(ket));
    const DenseMatrix post = proj * rho * proj;
    const double p = std::real(post.trace());
    if (p < 1e-12) continue;
    const DenseMatrix rho_p = partial_trace(post, {2, 2}, {0}) / p;
    s += p * entropy2(rho_p);
  }
  return s;
}

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, int iterations = 60) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iterations && b - a > 1e-12; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

DenseMatrix swap_qubits(const DenseMatrix& rho) {
  DenseMatrix out(4, 4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
          out(2 * a2 + a1, 2 * b2 + b1) = rho(2 * a1 + a2, 2 * b1 + b2);
  return out;
}

}  // namespace

double trace_distance(const DenseMatrix& rho1, const DenseMatrix& rho2) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols())
    throw ShapeError("trace_distance: dimension mismatch");
  const EigDecomposition eig = hermitian_eig(rho1 - rho2, 1e-8);
  return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

double von_neumann_entropy(const DenseMatrix& rho, LogBase base) {
  if (rho.rows() != rho.cols())
    throw InvalidStateError("entropy: matrix is not square");
  if (hermiticity_error(rho) > 1e-8)
    throw InvalidStateError("entropy: matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-8)
    throw InvalidStateError("entropy: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho);
  return clipped_entropy(solver.eigenvalues(), base);
}

QslResult qsl_time(const Trajectory& traj, const ComplexVector& psi0,
                   double tau) {
  require_uniform(traj.times);
  if (traj.generators.size() != traj.states.size())
    throw ConfigError("qsl: trajectory carries no generators");
  if (std::abs(traj.times.back() - tau) > 1e-9 * std::max(1.0, tau))
    throw ConfigError("qsl: trajectory does not end at tau");
  require_pure_start(traj, psi0);
  return qsl_sweep(traj, psi0).back();
}

std::vector<QslResult> qsl_sweep(const Trajectory& traj,
                                 const ComplexVector& psi0) {
  require_uniform(traj.times);
  if (traj.generators.size() != traj.states.size())
    throw ConfigError("qsl: trajectory carries no generators");
  require_pure_start(traj, psi0);

  const std::size_t n = traj.times.size();
  std::vector<MatrixNorms> norms(n);
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < n; ++k) norms[k] = matrix_norms(traj.generators[k]);

  const double dt = traj.times[1] - traj.times[0];
  std::vector<QslResult> out(n);
  double int_op = 0.0, int_hs = 0.0, int_tr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    QslResult& r = out[k];
    r.tau = traj.times[k];
    if (k > 0) {
      int_op += 0.5 * dt * (norms[k - 1].op + norms[k].op);
      int_hs += 0.5 * dt * (norms[k - 1].hs + norms[k].hs);
      int_tr += 0.5 * dt * (norms[k - 1].tr + norms[k].tr);
      r.lambda_op = int_op / r.tau;
      r.lambda_hs = int_hs / r.tau;
      r.lambda_tr = int_tr / r.tau;
    }
    r.bures_angle = bures_angle_of(traj.states[k], psi0);
    r.tau_qsl = k == 0 ? 0.0
                       : qsl_from(r.bures_angle, r.lambda_op, r.lambda_tr,
                                  r.lambda_hs);
  }
  return out;
}

double concurrence(const DenseMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw InvalidStateError("concurrence expects a 4x4 density matrix");
  require_density_matrix(rho, 1e-8);
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  const DenseMatrix rho_tilde = yy * rho.conjugate() * yy;
  const DenseMatrix sr = psd_sqrt(rho);
  const DenseMatrix m = sr * rho_tilde * sr;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  RealVector lam = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  // ascending from the solver: largest is lam(3)
  const double c = lam(3) - lam(2) - lam(1) - lam(0);
  return std::max(0.0, c);
}

DiscordResult quantum_discord(const DenseMatrix& rho_in, MeasuredSide side) {
  if (rho_in.rows() != 4 || rho_in.cols() != 4)
    throw InvalidStateError("discord expects a 4x4 density matrix");
  require_density_matrix(rho_in, 1e-8);
  const DenseMatrix rho =
      side == MeasuredSide::Q ? rho_in : swap_qubits(rho_in);

  constexpr int kThetaPoints = 61;
  constexpr int kPhiPoints = 121;
  const double dtheta = (M_PI / 2) / (kThetaPoints - 1);
  const double dphi = 2 * M_PI / kPhiPoints;

  std::vector<double> values(
      static_cast<std::size_t>(kThetaPoints) * kPhiPoints);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < kThetaPoints; ++i)
    for (int j = 0; j < kPhiPoints; ++j)
      values[static_cast<std::size_t>(i) * kPhiPoints + j] =
          conditional_entropy(rho, i * dtheta, j * dphi);

  // Strict comparison keeps the lexicographically smallest (theta, phi) on
  // ties, independent of thread count.
  int best_i = 0, best_j = 0;
  double best = values[0];
  for (int i = 0; i < kThetaPoints; ++i)
    for (int j = 0; j < kPhiPoints; ++j) {
      const double v = values[static_cast<std::size_t>(i) * kPhiPoints + j];
      if (v < best) {
        best = v;
        best_i = i;
        best_j = j;
      }
    }

  DiscordResult result;
  result.grid_value = best;

  // Coordinate-wise golden-section refinement around the grid minimum. The
  // objective is periodic in phi, so the phi bracket needs no clamping.
  double theta = best_i * dtheta, phi = best_j * dphi;
  double current = best;
  for (int pass = 0; pass < 40; ++pass) {
    theta = golden_section(
        [&](double th) { return conditional_entropy(rho, th, phi); },
        std::max(0.0, theta - dtheta), std::min(M_PI / 2, theta + dtheta));
    phi = golden_section(
        [&](double ph) { return conditional_entropy(rho, theta, ph); },
        phi - dphi, phi + dphi);
    const double refined = conditional_entropy(rho, theta, phi);
    if (current - refined < 1e-8) {
      current = std::min(current, refined);
      break;
    }
    current = refined;
  }

  const DenseMatrix rho_q = partial_trace(rho, {2, 2}, {1});
  result.discord = entropy2(rho_q) - entropy2(rho) + current;
  result.optimal_theta = theta;
  result.optimal_phi = phi < 0 ? phi + 2 * M_PI
                               : (phi >= 2 * M_PI ? phi - 2 * M_PI : phi);
  return result;
}

}  // namespace spinstar
