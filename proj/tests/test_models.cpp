#include <doctest.h>

#include <algorithm>
#include <random>

#include "spinstar/models.hpp"
#include "test_support.hpp"

using namespace spinstar;
namespace tu = spinstar::testutil;

namespace {

std::vector<double> sorted_eigs(const DenseMatrix& h) {
  const EigDecomposition eig = hermitian_eig(h, 1e-9);
  std::vector<double> out(eig.eigenvalues.data(),
                          eig.eigenvalues.data() + eig.eigenvalues.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Multiplicity-weighted union of the sector spectra, sorted.
std::vector<double> sector_spectrum(const ModelConfig& cfg) {
  std::vector<double> out;
  for (const SectorSpec& s : sectors(cfg.n_bath)) {
    const auto eigs = sorted_eigs(single_qubit_sector_h(cfg, s).h);
    const long mult = s.multiplicity.convert_to<long>();
    for (long c = 0; c < mult; ++c)
      out.insert(out.end(), eigs.begin(), eigs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sector_spectrum(const TwoQubitConfig& cfg) {
  std::vector<double> out;
  for (const SectorSpec& s1 : sectors(cfg.m_bath))
    for (const SectorSpec& s2 : sectors(cfg.n_bath)) {
      const auto eigs = sorted_eigs(two_qubit_global_sector_h(cfg, s1, s2).h);
      const long mult =
          (s1.multiplicity * s2.multiplicity).convert_to<long>();
      for (long c = 0; c < mult; ++c)
        out.insert(out.end(), eigs.begin(), eigs.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("single-qubit N = 1 block equals a hand-assembled Pauli sum") {
  ModelConfig cfg{1.7, -0.9, 0.6, 1, 1.0, false};
  // One bath spin: H = (w0/2) sz x I + (w/2) I x sz
  //                  + (eps/2)(sx x sx + sy x sy).
  DenseMatrix want = 0.5 * cfg.omega0 * kron(pauli_z(), identity(2));
  want += 0.5 * cfg.omega * kron(identity(2), pauli_z());
  want += 0.5 * cfg.epsilon *
          (kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()));

  const SectorHamiltonian block = single_qubit_sector_h(cfg, sectors(1)[0]);
  CHECK(tu::max_abs_diff(block.h, want) < 1e-14);
  REQUIRE(block.dims.size() == 2);
  CHECK(block.dims[0] == 2);
  CHECK(block.dims[1] == 2);

  // Interacting N = 1: no pair terms exist, the bath term is identical.
  cfg.bath_interacting = true;
  CHECK(tu::max_abs_diff(single_qubit_sector_h(cfg, sectors(1)[0]).h, want) <
        1e-14);
}

TEST_CASE("two-qubit M = N = 1 block equals a hand-assembled Pauli sum") {
  TwoQubitConfig cfg;
  cfg.m_bath = cfg.n_bath = 1;
  cfg.bath_interacting = false;
  const DenseMatrix i2 = identity(2);
  auto chain4 = [&](const DenseMatrix& a, const DenseMatrix& b,
                    const DenseMatrix& c, const DenseMatrix& d) {
    return kron(kron(a, b), kron(c, d));
  };

  DenseMatrix want = 0.5 * cfg.omega1 * chain4(pauli_z(), i2, i2, i2);
  want += 0.5 * cfg.omega2 * chain4(i2, pauli_z(), i2, i2);
  want += 0.5 * cfg.delta * chain4(pauli_z(), pauli_z(), i2, i2);
  want += 0.5 * cfg.omega_a * chain4(i2, i2, pauli_z(), i2);
  want += 0.5 * cfg.omega_b * chain4(i2, i2, i2, pauli_z());
  want += 0.5 * cfg.eps1 * (chain4(pauli_x(), i2, pauli_x(), i2) +
                            chain4(pauli_y(), i2, pauli_y(), i2));
  want += 0.5 * cfg.eps2 * (chain4(i2, pauli_x(), i2, pauli_x()) +
                            chain4(i2, pauli_y(), i2, pauli_y()));

  const SectorSpec s = sectors(1)[0];
  CHECK(tu::max_abs_diff(two_qubit_global_sector_h(cfg, s, s).h, want) <
        1e-14);
  CHECK(tu::max_abs_diff(bruteforce_full_h(cfg), want) < 1e-14);

  cfg.coupling_axis = CouplingAxis::XX;
  DenseMatrix want_xx =
      want - 0.5 * cfg.delta * chain4(pauli_z(), pauli_z(), i2, i2) +
      0.5 * cfg.delta * chain4(pauli_x(), pauli_x(), i2, i2);
  CHECK(tu::max_abs_diff(two_qubit_global_sector_h(cfg, s, s).h, want_xx) <
        1e-14);
}

TEST_CASE("sector spectra reproduce the full-space spectrum, single qubit") {
  for (int n = 2; n <= 6; ++n)
    for (bool interacting : {false, true}) {
      ModelConfig cfg{2.0, 2.0, 1.0, n, 1.0, interacting};
      CHECK(max_diff(sector_spectrum(cfg),
                     sorted_eigs(bruteforce_full_h(cfg))) < 1e-10);
    }
}

TEST_CASE("sector spectra reproduce the full-space spectrum, two qubits") {
  for (bool interacting : {false, true})
    for (CouplingAxis axis : {CouplingAxis::ZZ, CouplingAxis::XX}) {
      TwoQubitConfig cfg;
      cfg.m_bath = cfg.n_bath = 2;
      cfg.bath_interacting = interacting;
      cfg.coupling_axis = axis;
      CHECK(max_diff(sector_spectrum(cfg),
                     sorted_eigs(bruteforce_full_h(cfg))) < 1e-10);
    }
}

TEST_CASE("Hamiltonian builders stay Hermitian for random parameters") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> par(-3.0, 3.0);
  std::uniform_int_distribution<int> bath(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    ModelConfig cfg{par(rng), par(rng), par(rng), bath(rng), 1.0,
                    trial % 2 == 0};
    for (const SectorSpec& s : sectors(cfg.n_bath))
      CHECK(hermiticity_error(single_qubit_sector_h(cfg, s).h) < 1e-12);
  }
  for (int trial = 0; trial < 20; ++trial) {
    TwoQubitConfig cfg;
    cfg.omega1 = par(rng);
    cfg.omega2 = par(rng);
    cfg.omega_a = par(rng);
    cfg.omega_b = par(rng);
    cfg.eps1 = par(rng);
    cfg.eps2 = par(rng);
    cfg.delta = par(rng);
    cfg.m_bath = bath(rng) % 4 + 1;
    cfg.n_bath = bath(rng) % 4 + 1;
    cfg.bath_interacting = trial % 2 == 0;
    cfg.coupling_axis = trial % 3 == 0 ? CouplingAxis::XX : CouplingAxis::ZZ;
    for (const SectorSpec& s1 : sectors(cfg.m_bath))
      for (const SectorSpec& s2 : sectors(cfg.n_bath))
        CHECK(hermiticity_error(two_qubit_global_sector_h(cfg, s1, s2).h) <
              1e-12);
    CHECK(hermiticity_error(bruteforce_full_h(cfg)) < 1e-12);
  }
}

TEST_CASE("blocks scale linearly with the frequencies") {
  ModelConfig cfg{2.0, 1.5, 0.7, 5, 1.0, true};
  ModelConfig doubled = cfg;
  doubled.omega0 *= 2;
  doubled.omega *= 2;
  doubled.epsilon *= 2;
  for (const SectorSpec& s : sectors(cfg.n_bath))
    CHECK(tu::max_abs_diff(2.0 * single_qubit_sector_h(cfg, s).h,
                           single_qubit_sector_h(doubled, s).h) < 1e-12);
}

TEST_CASE("model validation and caps") {
  ModelConfig bad_n{2.0, 2.0, 1.0, 0, 1.0, true};
  CHECK_THROWS_AS(validate(bad_n), ConfigError);
  ModelConfig bad_t{2.0, 2.0, 1.0, 3, -1.0, true};
  CHECK_THROWS_AS(validate(bad_t), NonPositiveTemperatureError);

  ModelConfig cfg{2.0, 2.0, 1.0, 4, 1.0, true};
  CHECK_THROWS_AS(single_qubit_sector_h(cfg, SectorSpec{3, 1}),
                  InvalidSectorError);
  CHECK_THROWS_AS(single_qubit_sector_h(cfg, SectorSpec{6, 1}),
                  InvalidSectorError);

  ModelConfig big{2.0, 2.0, 1.0, 14, 1.0, true};
  CHECK_THROWS_AS(bruteforce_full_h(big), CapExceededError);
  CHECK_THROWS_AS(bruteforce_bath_h(15, 2.0, true), CapExceededError);

  TwoQubitConfig local;
  local.scenario = Scenario::Local;
  CHECK_THROWS_AS(two_qubit_global_sector_h(local, sectors(1)[0],
                                            sectors(1)[0]),
                  ScenarioMismatchError);
  CHECK_THROWS_AS(bruteforce_full_h(local), ScenarioMismatchError);
}
