#include "qsearch/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qsearch {

namespace {

std::array<CMatrix, 3> paulis() { return {pauli_x(), pauli_y(), pauli_z()}; }

}  // namespace

Eigen::Matrix4cd BlochDecomposition::reconstruct() const {
  CMatrix id = CMatrix::Identity(2, 2);
  std::array<CMatrix, 3> sigma = paulis();
  CMatrix out = kron(id, id);
  for (int i = 0; i < 3; ++i) {
    out += r(i) * kron(sigma[i], id);
    out += s(i) * kron(id, sigma[i]);
    for (int j = 0; j < 3; ++j) out += t(i, j) * kron(sigma[i], sigma[j]);
  }
  return 0.25 * out;
}

double concurrence_pure(const PureState& psi) {
  Eigen::Vector4cd flipped = spin_flip_4x4() * psi.amplitudes.conjugate();
  return std::abs(psi.amplitudes.dot(flipped));
}

double concurrence_mixed(const DensityMatrix& rho) {
  // The lambda_i are the square roots of the eigenvalues of
  // rho * spinflip(rho). With rho = Psi Psi^dag they equal the singular
  // values of the complex symmetric matrix N = Psi^T (sigma_y x sigma_y) Psi,
  // which unlike the eigenvalues of the (non-normal) product are perfectly
  // conditioned. The factorization still takes square roots of near-zero
  // spectral weights, which amplifies solver noise to its square root, so the
  // whole computation runs in long double to stay below 1e-9.
  Eigen::SelfAdjointEigenSolver<LCMatrix4> solver(rho.matrix().cast<LComplex>());
  if (solver.info() != Eigen::Success)
    throw NumericalError("concurrence_mixed: eigensolver did not converge");
  // Rank-revealing clamp: spectral weights far below the double-precision
  // noise floor of the input are rounding artifacts of true zeros, and the
  // square root below would blow them up to ~1e-9 concurrence error.
  const long double weight_floor =
      1e-13L * solver.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::Matrix<long double, 4, 1> weights = solver.eigenvalues();
  for (int i = 0; i < 4; ++i)
    weights(i) = weights(i) > weight_floor ? std::sqrt(weights(i)) : 0.0L;
  LCMatrix4 psi = solver.eigenvectors() * weights.asDiagonal();

  LCMatrix4 flip = spin_flip_4x4().cast<LComplex>();
  Eigen::JacobiSVD<LCMatrix4> svd(LCMatrix4(psi.transpose() * flip * psi));

  Eigen::Matrix<long double, 4, 1> lambda = svd.singularValues();  // descending
  return static_cast<double>(
      std::max(0.0L, lambda(0) - lambda(1) - lambda(2) - lambda(3)));
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
  CMatrix id = CMatrix::Identity(2, 2);
  std::array<CMatrix, 3> sigma = paulis();
  BlochDecomposition out;
  for (int i = 0; i < 3; ++i) {
    out.r(i) = (rho.matrix() * kron(sigma[i], id)).trace().real();
    out.s(i) = (rho.matrix() * kron(id, sigma[i])).trace().real();
    for (int j = 0; j < 3; ++j)
      out.t(i, j) = (rho.matrix() * kron(sigma[i], sigma[j])).trace().real();
  }
  return out;
}

double geometric_discord(const DensityMatrix& rho, DiscordNormalization norm) {
  // Measurement acts on the second qubit, the one the damping channels
  // address: x is its Bloch vector and T enters through T^T T. This is the
  // orientation under which the fully dephased states are classical and the
  // discord reaches zero at p = 1.
  BlochDecomposition bloch = bloch_decompose(rho);
  const Eigen::Vector3d& x = bloch.s;
  Eigen::Matrix3d k = x * x.transpose() + bloch.t.transpose() * bloch.t;
  double k_max = eig_sym_3x3(k)[0];
  double prefactor = norm == DiscordNormalization::PaperHalf ? 0.5 : 0.25;
  double value = prefactor * (x.squaredNorm() + bloch.t.squaredNorm() - k_max);
  if (value < 0.0 && value > -1e-9) value = 0.0;
  return value;
}

std::array<double, 4> final_probabilities(const DensityMatrix& rho,
                                          const GateParameter& param) {
  Eigen::Matrix4cd d = make_diffusion(param);
  Eigen::Matrix4cd final_state = d * rho.matrix() * d;
  std::array<double, 4> probs;
  for (int i = 0; i < 4; ++i)
    probs[i] = std::clamp(final_state(i, i).real(), 0.0, 1.0);
  return probs;
}

}  // namespace qsearch
