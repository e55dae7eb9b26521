#include "qsearch/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qsearch {

bool approx_equal(const CMatrix& a, const CMatrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= eps;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hs_norm(const CMatrix& m) { return m.norm(); }

double hs_norm(const Eigen::Matrix3d& m) { return m.norm(); }

std::array<Complex, 4> eig_general_4x4(const LCMatrix4& m) {
  // The concurrence path takes square roots of these eigenvalues, which
  // amplifies rounding noise near zero to its square root. Running the
  // iteration in long double keeps that below 1e-9.
  Eigen::ComplexSchur<LCMatrix4> schur;
  schur.setMaxIterations(kEigenIterationCap);
  schur.compute(m, /*computeU=*/false);
  if (schur.info() != Eigen::Success)
    throw NumericalError("eig_general_4x4: QR iteration did not converge");

  std::array<Complex, 4> ev;
  for (int i = 0; i < 4; ++i) {
    LComplex v = schur.matrixT()(i, i);
    ev[i] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return ev;
}

std::array<Complex, 4> eig_general_4x4(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("eig_general_4x4: input must be 4x4");
  return eig_general_4x4(LCMatrix4(m.cast<LComplex>()));
}

std::array<double, 3> eig_sym_3x3(const Eigen::Matrix3d& m) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("eig_sym_3x3: input is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eig_sym_3x3: eigensolver did not converge");

  std::array<double, 3> ev{solver.eigenvalues()(2), solver.eigenvalues()(1),
                           solver.eigenvalues()(0)};
  return ev;
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix spin_flip_4x4() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 3) = -1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 0) = -1;
  return m;
}

}  // namespace qsearch
