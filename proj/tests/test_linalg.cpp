#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "charpoly_oracle.hpp"
#include "qsearch/channels.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/linalg.hpp"
#include "qsearch/measures.hpp"

using namespace qsearch;

namespace {

CMatrix random_cmatrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

}  // namespace

TEST_CASE("kron identity and pauli products") {
  CMatrix id2 = CMatrix::Identity(2, 2);
  CHECK(approx_equal(kron(id2, id2), CMatrix::Identity(4, 4)));

  CMatrix yy = kron(pauli_y(), pauli_y());
  CHECK(yy(0, 3) == Complex(-1, 0));
  CHECK(yy(3, 0) == Complex(-1, 0));
  CHECK(approx_equal(yy, spin_flip_4x4(), 1e-15));
}

TEST_CASE("kron of superposition gates reproduces the prepared state") {
  GateParameter param = GateParameter::from_alpha_sq(0.8);
  CMatrix u = make_u_gate(param);
  CVector zero = CVector::Zero(4);
  zero(0) = 1;
  CVector state = kron(u, u) * zero;
  CHECK(std::abs(state(0) - Complex(0.8)) < 1e-12);
  CHECK(std::abs(state(1) - Complex(0.4)) < 1e-12);
  CHECK(std::abs(state(2) - Complex(0.4)) < 1e-12);
  CHECK(std::abs(state(3) - Complex(0.2)) < 1e-12);
}

TEST_CASE("kron is associative on random 2x2 inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    CMatrix a = random_cmatrix(rng, 2, 2);
    CMatrix b = random_cmatrix(rng, 2, 2);
    CMatrix c = random_cmatrix(rng, 2, 2);
    CHECK(approx_equal(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14));
  }
}

TEST_CASE("hs_norm basics and entry-sum identity") {
  CMatrix zero = CMatrix::Zero(3, 3);
  CHECK(hs_norm(zero) == 0.0);
  CHECK(hs_norm(pauli_y()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    CMatrix m = random_cmatrix(rng, 4, 4);
    double sum_sq = m.cwiseAbs2().sum();
    CHECK(std::abs(hs_norm(m) * hs_norm(m) - sum_sq) < 1e-12);
  }
}

TEST_CASE("hs_norm of the undamped phase correlation matrix is sqrt(3)") {
  GateParameter param = GateParameter::from_alpha(1.0 / std::sqrt(2.0));
  PureState psi2 = apply_oracle(prepare_superposition(param), MarkedElement(1));
  DensityMatrix rho = apply_channel(DensityMatrix::from_pure(psi2), phase_damping(0.0));
  BlochDecomposition bloch = bloch_decompose(rho);
  CHECK(hs_norm(bloch.t) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("eig_general_4x4 trivial spectra") {
  CMatrix id4 = CMatrix::Identity(4, 4);
  auto ev = eig_general_4x4(id4);
  for (const Complex& v : ev) CHECK(std::abs(v - Complex(1)) < 1e-14);

  CMatrix diag = CMatrix::Zero(4, 4);
  diag(0, 0) = 1; diag(1, 1) = 2; diag(2, 2) = 3; diag(3, 3) = 4;
  auto ev2 = eig_general_4x4(diag);
  std::array<double, 4> re;
  for (int i = 0; i < 4; ++i) re[i] = ev2[i].real();
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(re[3] == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("eig_general_4x4 rejects wrong dimensions") {
  CMatrix id3 = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(eig_general_4x4(id3), std::invalid_argument);
}

TEST_CASE("spin-flip product of the Bell-like state has spectrum {1,0,0,0}") {
  GateParameter param = GateParameter::from_alpha(1.0 / std::sqrt(2.0));
  PureState psi2 = apply_oracle(prepare_superposition(param), MarkedElement(1));
  Eigen::Matrix4cd rho = psi2.amplitudes * psi2.amplitudes.adjoint();
  CMatrix flip = spin_flip_4x4();
  CMatrix product = rho * flip * rho.conjugate() * flip;

  auto ev = eig_general_4x4(product);
  std::array<double, 4> re;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(ev[i].imag()) < 1e-9);
    re[i] = ev[i].real();
  }
  std::sort(re.begin(), re.end(), std::greater<>());
  CHECK(std::abs(re[0] - 1.0) < 1e-9);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(re[i]) < 1e-9);

  // And the independent characteristic-polynomial oracle agrees. The zero
  // eigenvalue here is triple, so root-finding accuracy degrades to roughly
  // the cube root of coefficient noise; compare accordingly.
  auto oracle_ev = qsearch_test::charpoly_eigenvalues(product);
  std::array<double, 4> oracle_re;
  for (int i = 0; i < 4; ++i) oracle_re[i] = oracle_ev[i].real();
  std::sort(oracle_re.begin(), oracle_re.end(), std::greater<>());
  for (int i = 0; i < 4; ++i) CHECK(std::abs(re[i] - oracle_re[i]) < 2e-5);
}

TEST_CASE("eig_general_4x4 matches the characteristic-polynomial oracle on PSD") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    CMatrix g = random_cmatrix(rng, 4, 4);
    Eigen::Matrix4cd psd = g * g.adjoint();
    psd /= psd.trace().real();

    auto ev = eig_general_4x4(CMatrix(psd));
    auto oracle_ev = qsearch_test::charpoly_eigenvalues(psd);
    std::array<double, 4> a, b;
    for (int i = 0; i < 4; ++i) {
      a[i] = ev[i].real();
      b[i] = oracle_ev[i].real();
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  }
}

TEST_CASE("eig_sym_3x3 ordering, trace and norm identities") {
  auto ev = eig_sym_3x3(Eigen::Matrix3d::Identity());
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[2] == doctest::Approx(1.0));

  Eigen::Matrix3d diag = Eigen::Vector3d(3, 1, 2).asDiagonal();
  auto ev2 = eig_sym_3x3(diag);
  CHECK(ev2[0] == doctest::Approx(3.0));
  CHECK(ev2[1] == doctest::Approx(2.0));
  CHECK(ev2[2] == doctest::Approx(1.0));

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Matrix3d g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = dist(rng);
    Eigen::Matrix3d sym = 0.5 * (g + g.transpose());
    auto vals = eig_sym_3x3(sym);
    CHECK(std::abs(vals[0] + vals[1] + vals[2] - sym.trace()) < 1e-10);
    double sq = vals[0] * vals[0] + vals[1] * vals[1] + vals[2] * vals[2];
    CHECK(std::abs(sq - hs_norm(sym) * hs_norm(sym)) < 1e-10);
    CHECK(vals[0] >= vals[1]);
    CHECK(vals[1] >= vals[2]);
  }
}

TEST_CASE("eig_sym_3x3 rejects asymmetric input") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 1) = 0.5;
  CHECK_THROWS_AS(eig_sym_3x3(m), std::invalid_argument);
}

TEST_CASE("correlation matrix of the undamped phase state has unit spectrum") {
  GateParameter param = GateParameter::from_alpha(1.0 / std::sqrt(2.0));
  PureState psi2 = apply_oracle(prepare_superposition(param), MarkedElement(1));
  DensityMatrix rho = apply_channel(DensityMatrix::from_pure(psi2), phase_damping(0.0));
  BlochDecomposition bloch = bloch_decompose(rho);
  auto ev = eig_sym_3x3(bloch.t * bloch.t.transpose());
  for (double v : ev) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("approx_equal respects the tolerance") {
  CMatrix a = CMatrix::Identity(2, 2);
  CMatrix b = a;
  b(0, 0) += 1e-12;
  CHECK(approx_equal(a, b));
  b(0, 0) += 1e-9;
  CHECK_FALSE(approx_equal(a, b));
  CHECK(approx_equal(a, b, 1e-8));
}
