#include <doctest.h>

#include <cmath>
#include <random>

#include "spinstar/measures.hpp"
#include "test_support.hpp"

using namespace spinstar;
namespace tu = spinstar::testutil;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

DenseMatrix bell_density() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return ket_density(v);
}

DenseMatrix werner(double p) {
  return p * bell_density() + (1.0 - p) * 0.25 * identity(4);
}

DenseMatrix random_product_state(std::mt19937& rng) {
  return kron(ket_density(tu::random_ket(2, rng)),
              ket_density(tu::random_ket(2, rng)));
}

}  // namespace

TEST_CASE("trace distance anchors") {
  DenseMatrix p0 = DenseMatrix::Zero(2, 2), p1 = DenseMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  CHECK(trace_distance(p0, p1) == doctest::Approx(1.0));
  CHECK(trace_distance(p0, p0) == doctest::Approx(0.0));
  CHECK(trace_distance(p0, 0.5 * identity(2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(trace_distance(p0, identity(4)), ShapeError);
}

TEST_CASE("trace distance is a unitarily invariant metric") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseMatrix a = tu::random_density(4, rng);
    const DenseMatrix b = tu::random_density(4, rng);
    const DenseMatrix c = tu::random_density(4, rng);
    const double dab = trace_distance(a, b);
    CHECK(dab >= 0.0);
    CHECK(dab <= 1.0 + 1e-12);
    CHECK(dab == doctest::Approx(trace_distance(b, a)).epsilon(1e-12));
    CHECK(dab <= trace_distance(a, c) + trace_distance(c, b) + 1e-12);

    const DenseMatrix u = tu::random_unitary(4, rng);
    CHECK(trace_distance(u * a * u.adjoint(), u * b * u.adjoint()) ==
          doctest::Approx(dab).epsilon(1e-10));
  }
}

TEST_CASE("von Neumann entropy anchors") {
  ComplexVector psi(2);
  psi << std::sqrt(0.3), std::sqrt(0.7);
  CHECK(von_neumann_entropy(ket_density(psi)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CHECK(von_neumann_entropy(0.5 * identity(2)) ==
        doctest::Approx(std::log(2.0)));
  CHECK(von_neumann_entropy(0.5 * identity(2), LogBase::Two) ==
        doctest::Approx(1.0));
  CHECK(von_neumann_entropy(0.25 * identity(4), LogBase::Two) ==
        doctest::Approx(2.0));

  DenseMatrix d = DenseMatrix::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  const double want = -(0.25 * std::log(0.25) + 0.75 * std::log(0.75));
  CHECK(von_neumann_entropy(d) == doctest::Approx(want));
  CHECK(von_neumann_entropy(d, LogBase::Two) ==
        doctest::Approx(want / std::log(2.0)));
}

TEST_CASE("entropy is basis independent and validates its input") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const DenseMatrix rho = tu::random_density(5, rng);
    const DenseMatrix u = tu::random_unitary(5, rng);
    CHECK(von_neumann_entropy(u * rho * u.adjoint()) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(von_neumann_entropy(identity(2)), InvalidStateError);
  DenseMatrix neg = DenseMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(von_neumann_entropy(neg), InvalidStateError);
}

TEST_CASE("concurrence anchors") {
  CHECK(concurrence(bell_density()) == doctest::Approx(1.0).epsilon(1e-10));

  ComplexVector psi_minus = ComplexVector::Zero(4);
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  CHECK(concurrence(ket_density(psi_minus)) ==
        doctest::Approx(1.0).epsilon(1e-10));

  CHECK(concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(concurrence(werner(0.9)) == doctest::Approx(0.85).epsilon(1e-8));
  CHECK(concurrence(werner(0.25)) == doctest::Approx(0.0));
  CHECK(concurrence(0.25 * identity(4)) == doctest::Approx(0.0));

  // A partially entangled pure state: C = 2 |a| |b|.
  ComplexVector part = ComplexVector::Zero(4);
  part(0) = std::sqrt(0.8);
  part(3) = std::sqrt(0.2);
  CHECK(concurrence(ket_density(part)) ==
        doctest::Approx(2.0 * std::sqrt(0.8 * 0.2)).epsilon(1e-10));

  CHECK_THROWS_AS(concurrence(identity(2)), InvalidStateError);
}

TEST_CASE("concurrence vanishes on separable mixtures") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    double w1 = unit(rng), w2 = unit(rng), w3 = unit(rng);
    const double total = w1 + w2 + w3;
    const DenseMatrix rho = (w1 * random_product_state(rng) +
                             w2 * random_product_state(rng) +
                             w3 * random_product_state(rng)) /
                            total;
    CHECK(concurrence(rho) < 1e-8);
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix rho = tu::random_density(4, rng);
    const DenseMatrix u = kron(tu::random_unitary(2, rng),
                               tu::random_unitary(2, rng));
    CHECK(concurrence(u * rho * u.adjoint()) ==
          doctest::Approx(concurrence(rho)).epsilon(1e-8));
  }
}

TEST_CASE("discord anchors") {
  const DiscordResult bell = quantum_discord(bell_density());
  CHECK(bell.discord == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(quantum_discord(bell_density(), MeasuredSide::P).discord ==
        doctest::Approx(1.0).epsilon(1e-6));

  // Classically correlated state: zero discord.
  DenseMatrix classical = DenseMatrix::Zero(4, 4);
  classical(0, 0) = classical(3, 3) = 0.5;
  CHECK(quantum_discord(classical).discord < 1e-8);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(quantum_discord(random_product_state(rng)).discord < 1e-6);

  CHECK_THROWS_AS(quantum_discord(identity(2)), InvalidStateError);
}

TEST_CASE("discord is non-negative on random states") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const DenseMatrix rho = tu::random_density(4, rng);
    const DiscordResult r = quantum_discord(rho);
    CHECK(r.discord > -1e-9);
    CHECK(r.discord < 1.0 + 1e-9);
  }
}

TEST_CASE("qsl closed-form oracle") {
  // Closed qubit (eps = 0) precessing under (omega0/2) sz from |+>. The
  // generator spectrum is constant, so L_op = 1, L_hs = sqrt 2, L_tr = 2, and
  // driving to tau = pi/4 gives a Bures angle of pi/4 and tau_qsl = 1/2.
  const ModelConfig cfg{2.0, 2.0, 0.0, 1, 1.0, false};
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const double tau = M_PI / 4;
  const Trajectory traj =
      evolve_single(cfg, ket_density(plus), linspace(0.0, tau, 600),
                    {.with_generators = true});
  const QslResult r = qsl_time(traj, plus, tau);
  CHECK(r.tau_qsl == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(r.lambda_op == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.lambda_hs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.lambda_tr == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.bures_angle == doctest::Approx(M_PI / 4).epsilon(1e-8));
  CHECK(r.lambda_op <= r.lambda_hs);
  CHECK(r.lambda_hs <= r.lambda_tr);
  CHECK(r.tau_qsl <= tau);

  // The sweep agrees with the endpoint evaluation at every grid point.
  const std::vector<QslResult> sweep = qsl_sweep(traj, plus);
  CHECK(sweep.back().tau_qsl == doctest::Approx(r.tau_qsl).epsilon(1e-12));
  CHECK(sweep.front().tau_qsl == 0.0);
  for (const QslResult& p : sweep) {
    CHECK(p.tau_qsl <= p.tau + 1e-12);
    if (p.tau > 0.0) {
      CHECK(p.lambda_op <= p.lambda_hs + 1e-12);
      CHECK(p.lambda_hs <= p.lambda_tr + 1e-12);
    }
  }
}

TEST_CASE("qsl of a stationary state is zero") {
  const ModelConfig cfg{2.0, 2.0, 0.0, 1, 1.0, false};
  ComplexVector one = ComplexVector::Zero(2);
  one(1) = 1.0;
  const Trajectory traj =
      evolve_single(cfg, ket_density(one), linspace(0.0, 1.0, 50),
                    {.with_generators = true});
  CHECK(qsl_time(traj, one, 1.0).tau_qsl == doctest::Approx(0.0));
}

TEST_CASE("qsl input validation") {
  const ModelConfig cfg{2.0, 2.0, 1.0, 2, 1.0, true};
  ComplexVector one = ComplexVector::Zero(2);
  one(1) = 1.0;

  Trajectory no_gen =
      evolve_single(cfg, ket_density(one), linspace(0.0, 1.0, 20));
  CHECK_THROWS_AS(qsl_time(no_gen, one, 1.0), ConfigError);

  Trajectory uneven = evolve_single(cfg, ket_density(one), {0.0, 0.3, 1.0},
                                    {.with_generators = true});
  CHECK_THROWS_AS(qsl_time(uneven, one, 1.0), ConfigError);

  Trajectory traj = evolve_single(cfg, ket_density(one),
                                  linspace(0.0, 1.0, 20),
                                  {.with_generators = true});
  CHECK_THROWS_AS(qsl_time(traj, one, 2.0), ConfigError);

  // Start state mismatch.
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(qsl_time(traj, plus, 1.0), InvalidStateError);
}
