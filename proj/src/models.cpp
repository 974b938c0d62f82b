#include "spinstar/models.hpp"

#include <cmath>
#include <map>

namespace spinstar {

namespace {

constexpr int kBruteForceMaxSpins = 14;

void check_sector(const SectorSpec& sector, int n) {
  if (sector.two_j < 0 || sector.two_j > n || (n - sector.two_j) % 2 != 0)
    throw InvalidSectorError("sector two_j invalid for bath size");
}

DenseMatrix bath_sector_h(double omega, int n, bool interacting,
                          const CollectiveOps& ops) {
  const int d = ops.jz.rows();
  if (interacting)
    return omega * (ops.jplus * ops.jminus / static_cast<double>(n) -
                    0.5 * identity(d));
  return (omega / n) * ops.jz;
}

// Tensor product over n_sites spin-1/2 factors with the given single-site
// operators placed at their sites and identity elsewhere.
DenseMatrix op_chain(int n_sites, const std::map<int, DenseMatrix>& ops) {
  DenseMatrix acc = DenseMatrix::Ones(1, 1);
  for (int site = 0; site < n_sites; ++site) {
    auto it = ops.find(site);
    acc = kron(acc, it == ops.end() ? identity(2) : it->second);
  }
  return acc;
}

// Pauli-sum bath Hamiltonian acting on sites [first, first + n) of an
// n_sites chain:
//   (omega/2N) [ sum_i sz_i + sum_{i<j} (sx_i sx_j + sy_i sy_j) ]   interacting
//   (omega/2N) sum_i sz_i                                           otherwise
DenseMatrix bath_terms(int n_sites, int first, int n, double omega,
                       bool interacting) {
  const long dim = 1L << n_sites;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i)
    h += op_chain(n_sites, {{first + i, pauli_z()}});
  if (interacting) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        h += op_chain(n_sites,
                      {{first + i, pauli_x()}, {first + j, pauli_x()}});
        h += op_chain(n_sites,
                      {{first + i, pauli_y()}, {first + j, pauli_y()}});
      }
  }
  return (omega / (2.0 * n)) * h;
}

// (eps / 2 sqrt(N)) sum_i (sx_c sx_i + sy_c sy_i), central spin at `center`.
DenseMatrix coupling_terms(int n_sites, int center, int first, int n,
                           double eps) {
  const long dim = 1L << n_sites;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    h += op_chain(n_sites, {{center, pauli_x()}, {first + i, pauli_x()}});
    h += op_chain(n_sites, {{center, pauli_y()}, {first + i, pauli_y()}});
  }
  return (eps / (2.0 * std::sqrt(static_cast<double>(n)))) * h;
}

}  // namespace

void validate(const ModelConfig& cfg) {
  if (cfg.n_bath < 1) throw ConfigError("n_bath must be >= 1");
  if (cfg.temperature <= 0)
    throw NonPositiveTemperatureError("temperature must be positive");
}

void validate(const TwoQubitConfig& cfg) {
  if (cfg.m_bath < 1 || cfg.n_bath < 1)
    throw ConfigError("bath sizes must be >= 1");
  if (cfg.temperature <= 0)
    throw NonPositiveTemperatureError("temperature must be positive");
}

SectorHamiltonian single_qubit_sector_h(const ModelConfig& cfg,
                                        const SectorSpec& sector) {
  validate(cfg);
  check_sector(sector, cfg.n_bath);

  const CollectiveOps ops = collective_ops(sector.two_j);
  const int d = sector.dim();
  const DenseMatrix ib = identity(d);

  DenseMatrix h = 0.5 * cfg.omega0 * kron(pauli_z(), ib);
  h += kron(identity(2),
            bath_sector_h(cfg.omega, cfg.n_bath, cfg.bath_interacting, ops));
  const double g = cfg.epsilon / std::sqrt(static_cast<double>(cfg.n_bath));
  h += g * (kron(pauli_x(), ops.jx) + kron(pauli_y(), ops.jy));

  return SectorHamiltonian{{sector}, std::move(h), {2, d}};
}

SectorHamiltonian two_qubit_global_sector_h(const TwoQubitConfig& cfg,
                                            const SectorSpec& s1,
                                            const SectorSpec& s2) {
  validate(cfg);
  if (cfg.scenario != Scenario::Global)
    throw ScenarioMismatchError("sector Hamiltonian requires Global scenario");
  check_sector(s1, cfg.m_bath);
  check_sector(s2, cfg.n_bath);

  const CollectiveOps ops1 = collective_ops(s1.two_j);
  const CollectiveOps ops2 = collective_ops(s2.two_j);
  const int d1 = s1.dim(), d2 = s2.dim();
  const DenseMatrix i2 = identity(2), ib1 = identity(d1), ib2 = identity(d2);

  auto prod4 = [](const DenseMatrix& a, const DenseMatrix& b,
                  const DenseMatrix& c, const DenseMatrix& d) {
    return kron(kron(a, b), kron(c, d));
  };

  DenseMatrix h = 0.5 * cfg.omega1 * prod4(pauli_z(), i2, ib1, ib2);
  h += 0.5 * cfg.omega2 * prod4(i2, pauli_z(), ib1, ib2);
  const DenseMatrix axis =
      cfg.coupling_axis == CouplingAxis::ZZ ? pauli_z() : pauli_x();
  h += 0.5 * cfg.delta * prod4(axis, axis, ib1, ib2);

  h += prod4(i2, i2,
             bath_sector_h(cfg.omega_a, cfg.m_bath, cfg.bath_interacting, ops1),
             ib2);
  h += prod4(i2, i2, ib1,
             bath_sector_h(cfg.omega_b, cfg.n_bath, cfg.bath_interacting, ops2));

  const double g1 = cfg.eps1 / std::sqrt(static_cast<double>(cfg.m_bath));
  h += g1 * (prod4(pauli_x(), i2, ops1.jx, ib2) +
             prod4(pauli_y(), i2, ops1.jy, ib2));
  const double g2 = cfg.eps2 / std::sqrt(static_cast<double>(cfg.n_bath));
  h += g2 * (prod4(i2, pauli_x(), ib1, ops2.jx) +
             prod4(i2, pauli_y(), ib1, ops2.jy));

  return SectorHamiltonian{{s1, s2}, std::move(h), {2, 2, d1, d2}};
}

DenseMatrix bruteforce_full_h(const ModelConfig& cfg) {
  validate(cfg);
  const int n_sites = 1 + cfg.n_bath;
  if (n_sites > kBruteForceMaxSpins)
    throw CapExceededError("bruteforce_full_h: too many spins");

  DenseMatrix h =
      0.5 * cfg.omega0 * op_chain(n_sites, {{0, pauli_z()}});
  h += bath_terms(n_sites, 1, cfg.n_bath, cfg.omega, cfg.bath_interacting);
  h += coupling_terms(n_sites, 0, 1, cfg.n_bath, cfg.epsilon);
  return h;
}

DenseMatrix bruteforce_full_h(const TwoQubitConfig& cfg) {
  validate(cfg);
  if (cfg.scenario != Scenario::Global)
    throw ScenarioMismatchError(
        "bruteforce_full_h: joint Hamiltonian exists only in Global scenario");
  const int n_sites = 2 + cfg.m_bath + cfg.n_bath;
  if (n_sites > kBruteForceMaxSpins)
    throw CapExceededError("bruteforce_full_h: too many spins");

  const DenseMatrix axis =
      cfg.coupling_axis == CouplingAxis::ZZ ? pauli_z() : pauli_x();
  DenseMatrix h = 0.5 * cfg.omega1 * op_chain(n_sites, {{0, pauli_z()}});
  h += 0.5 * cfg.omega2 * op_chain(n_sites, {{1, pauli_z()}});
  h += 0.5 * cfg.delta * op_chain(n_sites, {{0, axis}, {1, axis}});
  h += bath_terms(n_sites, 2, cfg.m_bath, cfg.omega_a, cfg.bath_interacting);
  h += bath_terms(n_sites, 2 + cfg.m_bath, cfg.n_bath, cfg.omega_b,
                  cfg.bath_interacting);
  h += coupling_terms(n_sites, 0, 2, cfg.m_bath, cfg.eps1);
  h += coupling_terms(n_sites, 1, 2 + cfg.m_bath, cfg.n_bath, cfg.eps2);
  return h;
}

DenseMatrix bruteforce_bath_h(int n, double omega, bool interacting) {
  if (n < 1) throw ConfigError("bath size must be >= 1");
  if (n > kBruteForceMaxSpins)
    throw CapExceededError("bruteforce_bath_h: too many spins");
  return bath_terms(n, 0, n, omega, interacting);
}

}  // namespace spinstar
