#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "qsearch/channels.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/measures.hpp"

using namespace qsearch;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::Matrix2cd kraus_completeness_sum(const KrausChannel& channel) {
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const Eigen::Matrix2cd& e : channel.operators) sum += e.adjoint() * e;
  return sum;
}

DensityMatrix random_density(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::Matrix4cd g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  Eigen::Matrix4cd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_matrix(m);
}

DensityMatrix oracle_state(double alpha) {
  PureState psi2 = apply_oracle(
      prepare_superposition(GateParameter::from_alpha(alpha)), MarkedElement(1));
  return DensityMatrix::from_pure(psi2);
}

}  // namespace

TEST_CASE("channel constructors validate p and satisfy completeness") {
  CHECK_THROWS_AS(amplitude_damping(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_damping(1.1), std::invalid_argument);
  CHECK_THROWS_AS(phase_damping(2.0), std::invalid_argument);

  for (double p : {0.0, 0.36, 0.5, 1.0}) {
    CHECK((kraus_completeness_sum(amplitude_damping(p)) -
           Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((kraus_completeness_sum(phase_damping(p)) -
           Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("p = 0 is the identity channel") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    DensityMatrix rho = random_density(rng);
    for (ChannelKind kind : {ChannelKind::Amplitude, ChannelKind::Phase}) {
      KrausChannel channel =
          kind == ChannelKind::Amplitude ? amplitude_damping(0.0) : phase_damping(0.0);
      for (TargetQubit target : {TargetQubit::First, TargetQubit::Second}) {
        DensityMatrix out = apply_channel(rho, channel, target);
        CHECK((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("full amplitude decay maps |1> to |0> on the target qubit") {
  Eigen::Matrix4cd excited = Eigen::Matrix4cd::Zero();
  excited(3, 3) = 1;  // |11><11|
  DensityMatrix out = apply_channel(DensityMatrix::from_matrix(excited),
                                    amplitude_damping(1.0), TargetQubit::Second);
  CHECK(std::abs(out.matrix()(2, 2).real() - 1.0) < 1e-14);

  DensityMatrix out_first = apply_channel(DensityMatrix::from_matrix(excited),
                                          amplitude_damping(1.0), TargetQubit::First);
  CHECK(std::abs(out_first.matrix()(1, 1).real() - 1.0) < 1e-14);
}

TEST_CASE("full dephasing kills coherences and keeps populations") {
  DensityMatrix rho = oracle_state(0.77);
  DensityMatrix out = apply_channel(rho, phase_damping(1.0), TargetQubit::Second);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(out.matrix()(i, i) - rho.matrix()(i, i)) < 1e-14);
    for (int j = 0; j < 4; ++j) {
      bool same_second_qubit = (i & 1) == (j & 1);
      if (!same_second_qubit) CHECK(std::abs(out.matrix()(i, j)) < 1e-14);
    }
  }
}

TEST_CASE("half dephasing shrinks the |+> coherence by sqrt(1/2)") {
  // |+><+| on the second qubit of a product state.
  Eigen::Matrix2cd plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  zero(0, 0) = 1;
  DensityMatrix rho = DensityMatrix::from_matrix(kron(zero, plus));
  DensityMatrix out = apply_channel(rho, phase_damping(0.5), TargetQubit::Second);
  CHECK(std::abs(out.matrix()(0, 0).real() - 0.5) < 1e-14);
  CHECK(std::abs(out.matrix()(1, 1).real() - 0.5) < 1e-14);
  CHECK(std::abs(out.matrix()(0, 1).real() - 0.5 * std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("damped oracle state matches the published corner entries") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    double alpha = dist(rng), p = dist(rng);
    GateParameter param = GateParameter::from_alpha(alpha);
    double a = param.alpha(), b = param.beta();
    DensityMatrix out =
        apply_channel(oracle_state(alpha), amplitude_damping(p), TargetQubit::Second);
    double a2 = a * a, b2 = b * b;
    CHECK(std::abs(out.matrix()(0, 0).real() - (a2 * a2 + p * a2 * b2)) < 1e-12);
  }
}

TEST_CASE("amplitude-damped state at full decay is a product state") {
  DensityMatrix out = apply_channel(oracle_state(kInvSqrt2), amplitude_damping(1.0),
                                    TargetQubit::Second);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = 0.5;  // |00><00|
  expected(2, 2) = 0.5;  // |10><10|
  CHECK((out.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("full published-matrix audit of the amplitude-damped state") {
  // Entry (2,1) of the published matrix violates Hermiticity against its own
  // (1,2) entry; this audit uses the Hermiticity-consistent value there.
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    double p = dist(rng);
    GateParameter param = GateParameter::from_alpha(dist(rng));
    double a = param.alpha(), b = param.beta();
    double q = std::sqrt(1.0 - p);
    double a2 = a * a, b2 = b * b;
    double a3b = a2 * a * b, ab3 = a * b2 * b, a2b2 = a2 * b2;
    Eigen::Matrix4d printed;
    printed << a2 * a2 + p * a2b2, -q * a3b, a3b - p * ab3, q * a2b2,
        -q * a3b, (1 - p) * a2b2, -q * a2b2, -(1 - p) * ab3,
        a3b - p * ab3, -q * a2b2, a2b2 + p * b2 * b2, q * ab3,
        q * a2b2, -(1 - p) * ab3, q * ab3, (1 - p) * b2 * b2;

    DensityMatrix out = apply_channel(oracle_state(param.alpha()),
                                      amplitude_damping(p), TargetQubit::Second);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(std::abs(out.matrix()(i, j).real() - printed(i, j)) < 1e-10);
  }
}

TEST_CASE("trace, hermiticity and positivity preserved on random inputs") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    DensityMatrix rho = random_density(rng);
    double p = dist(rng);
    KrausChannel channel =
        trial % 2 == 0 ? amplitude_damping(p) : phase_damping(p);
    TargetQubit target = trial % 4 < 2 ? TargetQubit::Second : TargetQubit::First;
    DensityMatrix out = apply_channel(rho, channel, target);

    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-12);
    CHECK((out.matrix() - out.matrix().adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(out.matrix(),
                                                           Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("amplitude damping composes as a semigroup") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    DensityMatrix rho = random_density(rng);
    double p1 = dist(rng), p2 = dist(rng);
    DensityMatrix twice = apply_channel(
        apply_channel(rho, amplitude_damping(p1)), amplitude_damping(p2));
    DensityMatrix once =
        apply_channel(rho, amplitude_damping(1.0 - (1.0 - p1) * (1.0 - p2)));
    CHECK((twice.matrix() - once.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  }
}
