#include "spinstar/dynamics.hpp"

#include <cmath>
#include <utility>

namespace spinstar {

namespace {

constexpr Complex kImag{0.0, 1.0};

void require_times(const std::vector<double>& times) {
  if (times.empty()) throw ConfigError("empty time grid");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (times[k] <= times[k - 1])
      throw ConfigError("time grid must be strictly ascending");
}

// One diagonalized sector block ready for propagation. dB is the bath block
// dimension; the full block index is p = s * dB + b with s the system index.
struct SectorPropagator {
  RealVector lambda;
  DenseMatrix vectors;
  int nsys = 0;
  int bath_dim = 0;

  explicit SectorPropagator(const DenseMatrix& h, int nsys_) : nsys(nsys_) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
    if (solver.info() != Eigen::Success)
      throw Error("sector eigensolver failed to converge");
    lambda = solver.eigenvalues();
    vectors = solver.eigenvectors();
    bath_dim = static_cast<int>(h.rows()) / nsys;
  }

  // Evolves each system-side input through this block with the bath prepared
  // in diag(bath_weights), then traces the bath out. Adds coef-weighted
  // results (and generators, when requested) into out/gens, which are
  // indexed [time][input].
  void accumulate(const std::vector<DenseMatrix>& inputs,
                  bool hermitian_inputs,
                  const std::vector<double>& bath_weights,
                  const std::vector<double>& times, bool with_generators,
                  double coef, std::vector<std::vector<DenseMatrix>>& out,
                  std::vector<std::vector<DenseMatrix>>& gens) const {
    const Eigen::Index dim = vectors.rows();
    const Eigen::Index n_times = static_cast<Eigen::Index>(times.size());
    const std::size_t n_inputs = inputs.size();

    // A_i = V^H (S_i x diag(w)) V
    std::vector<DenseMatrix> a(n_inputs);
    for (std::size_t i = 0; i < n_inputs; ++i) {
      DenseMatrix x(dim, dim);
      for (int s = 0; s < nsys; ++s)
        for (int b = 0; b < bath_dim; ++b) {
          x.row(s * bath_dim + b).setZero();
          for (int sp = 0; sp < nsys; ++sp) {
            const Complex c = inputs[i](s, sp);
            if (c != 0.0)
              x.row(s * bath_dim + b) +=
                  c * bath_weights[b] * vectors.row(sp * bath_dim + b);
          }
        }
      a[i] = vectors.adjoint() * x;
    }

    // Phase tables: uph(e, k) = exp(-i lambda_e t_k), vph = lambda * uph.
    DenseMatrix uph(dim, n_times);
    for (Eigen::Index k = 0; k < n_times; ++k)
      uph.col(k) =
          (-kImag * times[k] * lambda.array().cast<Complex>()).exp().matrix();
    DenseMatrix vph;
    if (with_generators) vph = lambda.asDiagonal() * uph;

    for (int s = 0; s < nsys; ++s) {
      const int sp_begin = hermitian_inputs ? s : 0;
      for (int sp = sp_begin; sp < nsys; ++sp) {
        // W_{ab} = sum_b' V[(s,b'),a] conj(V[(sp,b'),b]); then the reduced
        // matrix element at time t is sum_{ab} (W o A)_{ab} u_a(t) u_b(t)*.
        const DenseMatrix w =
            vectors.middleRows(s * bath_dim, bath_dim).transpose() *
            vectors.middleRows(sp * bath_dim, bath_dim).conjugate();
        for (std::size_t i = 0; i < n_inputs; ++i) {
          const DenseMatrix c = w.cwiseProduct(a[i]);
          const DenseMatrix t1 = c * uph.conjugate();
          const Eigen::RowVectorXcd vals =
              (uph.array() * t1.array()).colwise().sum();
          Eigen::RowVectorXcd gen_vals;
          if (with_generators) {
            const DenseMatrix t2 = c * vph.conjugate();
            gen_vals = -kImag * ((vph.array() * t1.array()).colwise().sum() -
                                 (uph.array() * t2.array()).colwise().sum())
                                    .matrix();
          }
          for (Eigen::Index k = 0; k < n_times; ++k) {
            out[k][i](s, sp) += coef * vals(k);
            if (hermitian_inputs && sp > s)
              out[k][i](sp, s) += coef * std::conj(vals(k));
            if (with_generators) {
              gens[k][i](s, sp) += coef * gen_vals(k);
              if (hermitian_inputs && sp > s)
                gens[k][i](sp, s) += coef * std::conj(gen_vals(k));
            }
          }
        }
      }
    }
  }
};

std::vector<std::vector<DenseMatrix>> zero_table(std::size_t n_times,
                                                 std::size_t n_inputs,
                                                 int nsys) {
  return std::vector<std::vector<DenseMatrix>>(
      n_times,
      std::vector<DenseMatrix>(n_inputs, DenseMatrix::Zero(nsys, nsys)));
}

void check_trajectory_state(const DenseMatrix& rho) {
  if (hermiticity_error(rho) > 1e-10)
    throw PositivityViolationError("evolved state lost Hermiticity");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-8)
    throw PositivityViolationError("evolved state lost unit trace");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho);
  if (solver.eigenvalues().minCoeff() < -1e-9)
    throw PositivityViolationError("evolved state eigenvalue below -1e-9");
}

}  // namespace

BathSpec bath_of(const ModelConfig& cfg) {
  return {cfg.omega, cfg.n_bath, cfg.bath_interacting, cfg.temperature};
}

BathSpec first_bath_of(const TwoQubitConfig& cfg) {
  return {cfg.omega_a, cfg.m_bath, cfg.bath_interacting, cfg.temperature};
}

BathSpec second_bath_of(const TwoQubitConfig& cfg) {
  return {cfg.omega_b, cfg.n_bath, cfg.bath_interacting, cfg.temperature};
}

double bath_level_energy(const BathSpec& bath, int two_j, int two_m) {
  const double j = 0.5 * two_j;
  const double m = 0.5 * two_m;
  if (bath.interacting)
    return bath.omega * ((j * (j + 1) - m * (m - 1)) / bath.n_spins - 0.5);
  return bath.omega / bath.n_spins * m;
}

ThermalWeights thermal_weights(const BathSpec& bath) {
  if (bath.temperature <= 0)
    throw NonPositiveTemperatureError("temperature must be positive");
  ThermalWeights tw;
  tw.sector_list = sectors(bath.n_spins);
  tw.weights.reserve(tw.sector_list.size());
  for (const SectorSpec& sector : tw.sector_list) {
    std::vector<double> w;
    w.reserve(sector.dim());
    double sector_sum = 0.0;
    for (int two_m = sector.two_j; two_m >= -sector.two_j; two_m -= 2) {
      const double e = bath_level_energy(bath, sector.two_j, two_m);
      w.push_back(std::exp(-e / bath.temperature));
      sector_sum += w.back();
    }
    tw.partition_function += sector.multiplicity_as_double() * sector_sum;
    tw.weights.push_back(std::move(w));
  }
  return tw;
}

Trajectory evolve_single(const ModelConfig& cfg, const DenseMatrix& rho0,
                         const std::vector<double>& times,
                         const EvolveOptions& opts) {
  validate(cfg);
  require_times(times);
  if (rho0.rows() != 2 || rho0.cols() != 2)
    throw InvalidStateError("evolve_single expects a 2x2 density matrix");
  require_density_matrix(rho0);

  const ThermalWeights tw = thermal_weights(bath_of(cfg));
  const std::size_t n_sectors = tw.sector_list.size();
  const std::vector<DenseMatrix> inputs{rho0};

  // Independent sector contributions; summed in sector order afterwards so
  // the result does not depend on the worker count.
  std::vector<std::vector<std::vector<DenseMatrix>>> partial_states(n_sectors);
  std::vector<std::vector<std::vector<DenseMatrix>>> partial_gens(n_sectors);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < n_sectors; ++s) {
    auto out = zero_table(times.size(), 1, 2);
    auto gens = opts.with_generators
                    ? zero_table(times.size(), 1, 2)
                    : std::vector<std::vector<DenseMatrix>>{};
    const SectorHamiltonian block =
        single_qubit_sector_h(cfg, tw.sector_list[s]);
    const SectorPropagator prop(block.h, 2);
    const double coef = tw.sector_list[s].multiplicity_as_double() /
                        tw.partition_function;
    prop.accumulate(inputs, true, tw.weights[s], times, opts.with_generators,
                    coef, out, gens);
    partial_states[s] = std::move(out);
    partial_gens[s] = std::move(gens);
  }

  Trajectory traj;
  traj.times = times;
  traj.states.assign(times.size(), DenseMatrix::Zero(2, 2));
  if (opts.with_generators)
    traj.generators.assign(times.size(), DenseMatrix::Zero(2, 2));
  for (std::size_t s = 0; s < n_sectors; ++s)
    for (std::size_t k = 0; k < times.size(); ++k) {
      traj.states[k] += partial_states[s][k][0];
      if (opts.with_generators) traj.generators[k] += partial_gens[s][k][0];
    }

  if (opts.check_states)
    for (const DenseMatrix& rho : traj.states) check_trajectory_state(rho);
  return traj;
}

Trajectory evolve_two_qubit_global(const TwoQubitConfig& cfg,
                                   const DenseMatrix& rho0,
                                   const std::vector<double>& times,
                                   const EvolveOptions& opts) {
  validate(cfg);
  if (cfg.scenario != Scenario::Global)
    throw ScenarioMismatchError(
        "evolve_two_qubit_global requires Global scenario");
  require_times(times);
  if (rho0.rows() != 4 || rho0.cols() != 4)
    throw InvalidStateError("expected a 4x4 two-qubit density matrix");
  require_density_matrix(rho0);

  const ThermalWeights tw1 = thermal_weights(first_bath_of(cfg));
  const ThermalWeights tw2 = thermal_weights(second_bath_of(cfg));
  const std::size_t n1 = tw1.sector_list.size(), n2 = tw2.sector_list.size();
  const std::vector<DenseMatrix> inputs{rho0};

  std::vector<std::vector<std::vector<DenseMatrix>>> partial_states(n1 * n2);
  std::vector<std::vector<std::vector<DenseMatrix>>> partial_gens(n1 * n2);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t pair = 0; pair < n1 * n2; ++pair) {
    const std::size_t i1 = pair / n2, i2 = pair % n2;
    const SectorSpec& s1 = tw1.sector_list[i1];
    const SectorSpec& s2 = tw2.sector_list[i2];

    auto out = zero_table(times.size(), 1, 4);
    auto gens = opts.with_generators
                    ? zero_table(times.size(), 1, 4)
                    : std::vector<std::vector<DenseMatrix>>{};

    const SectorHamiltonian block = two_qubit_global_sector_h(cfg, s1, s2);
    const SectorPropagator prop(block.h, 4);

    // Joint bath weights, bath-1 major, matching the (q1,q2,b1,b2) ordering.
    std::vector<double> w(s1.dim() * static_cast<std::size_t>(s2.dim()));
    for (int b1 = 0; b1 < s1.dim(); ++b1)
      for (int b2 = 0; b2 < s2.dim(); ++b2)
        w[b1 * s2.dim() + b2] = tw1.weights[i1][b1] * tw2.weights[i2][b2];

    const double coef = s1.multiplicity_as_double() *
                        s2.multiplicity_as_double() /
                        (tw1.partition_function * tw2.partition_function);
    prop.accumulate(inputs, true, w, times, opts.with_generators, coef, out,
                    gens);
    partial_states[pair] = std::move(out);
    partial_gens[pair] = std::move(gens);
  }

  Trajectory traj;
  traj.times = times;
  traj.states.assign(times.size(), DenseMatrix::Zero(4, 4));
  if (opts.with_generators)
    traj.generators.assign(times.size(), DenseMatrix::Zero(4, 4));
  for (std::size_t pair = 0; pair < n1 * n2; ++pair)
    for (std::size_t k = 0; k < times.size(); ++k) {
      traj.states[k] += partial_states[pair][k][0];
      if (opts.with_generators)
        traj.generators[k] += partial_gens[pair][k][0];
    }

  if (opts.check_states)
    for (const DenseMatrix& rho : traj.states) check_trajectory_state(rho);
  return traj;
}

DenseMatrix QubitSuperoperator::apply(const DenseMatrix& rho) const {
  Eigen::Vector4cd v;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) v(2 * a + b) = rho(a, b);
  const Eigen::Vector4cd out = mat * v;
  DenseMatrix res(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) res(a, b) = out(2 * a + b);
  return res;
}

MapTrajectory qubit_map_trajectory(const ModelConfig& cfg,
                                   const std::vector<double>& times,
                                   bool with_derivatives) {
  validate(cfg);
  require_times(times);

  // Evolve the four matrix units |a><b| as (non-Hermitian) initial operators.
  std::vector<DenseMatrix> units;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      DenseMatrix e = DenseMatrix::Zero(2, 2);
      e(a, b) = 1.0;
      units.push_back(std::move(e));
    }

  const ThermalWeights tw = thermal_weights(bath_of(cfg));
  const std::size_t n_sectors = tw.sector_list.size();

  std::vector<std::vector<std::vector<DenseMatrix>>> partial_states(n_sectors);
  std::vector<std::vector<std::vector<DenseMatrix>>> partial_gens(n_sectors);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < n_sectors; ++s) {
    auto out = zero_table(times.size(), units.size(), 2);
    auto gens = with_derivatives
                    ? zero_table(times.size(), units.size(), 2)
                    : std::vector<std::vector<DenseMatrix>>{};
    const SectorHamiltonian block =
        single_qubit_sector_h(cfg, tw.sector_list[s]);
    const SectorPropagator prop(block.h, 2);
    const double coef = tw.sector_list[s].multiplicity_as_double() /
                        tw.partition_function;
    prop.accumulate(units, false, tw.weights[s], times, with_derivatives,
                    coef, out, gens);
    partial_states[s] = std::move(out);
    partial_gens[s] = std::move(gens);
  }

  MapTrajectory mt;
  mt.times = times;
  mt.maps.assign(times.size(), QubitSuperoperator{});
  if (with_derivatives)
    mt.derivatives.assign(times.size(), QubitSuperoperator{});
  for (std::size_t k = 0; k < times.size(); ++k) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
    for (std::size_t s = 0; s < n_sectors; ++s)
      for (int col = 0; col < 4; ++col)
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb) {
            m(2 * sa + sb, col) += partial_states[s][k][col](sa, sb);
            if (with_derivatives)
              d(2 * sa + sb, col) += partial_gens[s][k][col](sa, sb);
          }
    mt.maps[k].mat = m;
    if (with_derivatives) mt.derivatives[k].mat = d;
  }
  return mt;
}

QubitSuperoperator qubit_map(const ModelConfig& cfg, double t) {
  if (t < 0) throw ConfigError("qubit_map: time must be >= 0");
  return qubit_map_trajectory(cfg, {t}, false).maps[0];
}

DenseMatrix apply_local_product(const QubitSuperoperator& map_a,
                                const QubitSuperoperator& map_b,
                                const DenseMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw ShapeError("apply_local_product expects a 4x4 matrix");
  DenseMatrix out = DenseMatrix::Zero(4, 4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
          for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2)
              for (int d1 = 0; d1 < 2; ++d1)
                for (int d2 = 0; d2 < 2; ++d2)
                  out(2 * a1 + a2, 2 * b1 + b2) +=
                      map_a.mat(2 * a1 + b1, 2 * c1 + d1) *
                      map_b.mat(2 * a2 + b2, 2 * c2 + d2) *
                      rho(2 * c1 + c2, 2 * d1 + d2);
  return out;
}

Trajectory evolve_two_qubit_local(const ModelConfig& cfg_a,
                                  const ModelConfig& cfg_b,
                                  const DenseMatrix& rho0,
                                  const std::vector<double>& times,
                                  const EvolveOptions& opts) {
  require_times(times);
  if (rho0.rows() != 4 || rho0.cols() != 4)
    throw InvalidStateError("expected a 4x4 two-qubit density matrix");
  require_density_matrix(rho0);

  const MapTrajectory maps_a =
      qubit_map_trajectory(cfg_a, times, opts.with_generators);
  const MapTrajectory maps_b =
      qubit_map_trajectory(cfg_b, times, opts.with_generators);

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    traj.states.push_back(
        apply_local_product(maps_a.maps[k], maps_b.maps[k], rho0));
    if (opts.with_generators)
      traj.generators.push_back(
          apply_local_product(maps_a.derivatives[k], maps_b.maps[k], rho0) +
          apply_local_product(maps_a.maps[k], maps_b.derivatives[k], rho0));
  }

  if (opts.check_states)
    for (const DenseMatrix& rho : traj.states) check_trajectory_state(rho);
  return traj;
}

}  // namespace spinstar
