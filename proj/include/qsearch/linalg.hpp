#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qsearch {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Thrown when an iterative numerical routine fails to converge within its
/// iteration cap. Callers see this instead of a silently wrong result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kDefaultMatrixTolerance = 1e-10;

/// Iteration cap for the general eigensolver (per Hessenberg row, the usual
/// QR-iteration budget unit).
constexpr int kEigenIterationCap = 10000;

bool approx_equal(const CMatrix& a, const CMatrix& b,
                  double eps = kDefaultMatrixTolerance);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hilbert-Schmidt norm sqrt(Tr(m^dag m)).
double hs_norm(const CMatrix& m);
double hs_norm(const Eigen::Matrix3d& m);

using LComplex = std::complex<long double>;
using LCMatrix4 = Eigen::Matrix<LComplex, 4, 4>;

/// Eigenvalues (with multiplicity, unordered) of a general complex 4x4
/// matrix. Computed by complex Schur/QR iteration in extended precision so
/// that products of PSD matrices come out with ~1e-10 absolute accuracy.
/// Throws NumericalError on non-convergence.
std::array<Complex, 4> eig_general_4x4(const CMatrix& m);

/// Extended-precision entry point: callers that form the input product
/// themselves in long double (e.g. the concurrence path, where square roots
/// amplify rounding noise near zero) keep full accuracy end to end.
std::array<Complex, 4> eig_general_4x4(const LCMatrix4& m);

/// Eigenvalues of a real symmetric 3x3, descending. Input must be symmetric
/// within 1e-12; asymmetric input throws std::invalid_argument.
std::array<double, 3> eig_sym_3x3(const Eigen::Matrix3d& m);

// Pauli matrices and the two-qubit spin-flip operator sigma_y x sigma_y.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix spin_flip_4x4();

}  // namespace qsearch
