#include "qsearch/grover.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace qsearch {

GateParameter GateParameter::from_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("GateParameter: alpha must lie in [0, 1]");
  return GateParameter(alpha, std::sqrt(1.0 - alpha * alpha));
}

GateParameter GateParameter::from_alpha_sq(double alpha_sq) {
  if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0))
    throw std::invalid_argument("GateParameter: alpha^2 must lie in [0, 1]");
  return GateParameter(std::sqrt(alpha_sq), std::sqrt(1.0 - alpha_sq));
}

GateParameter concurrence_to_alpha(double c, Branch branch) {
  if (!(c >= 0.0 && c <= 1.0))
    throw std::invalid_argument("concurrence_to_alpha: c must lie in [0, 1]");
  double root = std::sqrt(1.0 - c);
  double alpha_sq = branch == Branch::Plus ? (1.0 + root) / 2.0 : (1.0 - root) / 2.0;
  return GateParameter::from_alpha_sq(alpha_sq);
}

MarkedElement::MarkedElement(int index) : index_(index) {
  if (index < 0 || index > 3)
    throw std::invalid_argument("MarkedElement: index must be 0..3");
}

PureState PureState::from_amplitudes(const Eigen::Vector4cd& amps) {
  if (std::abs(amps.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  return PureState{amps};
}

double PureState::probability(int basis_index) const {
  return std::norm(amplitudes(basis_index));
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::Matrix4cd& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-10 || std::abs(m.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.amplitudes * psi.amplitudes.adjoint());
}

CMatrix make_u_gate(const GateParameter& param) {
  CMatrix u(2, 2);
  u << param.alpha(), param.beta(), param.beta(), -param.alpha();
  return u;
}

PureState prepare_superposition(const GateParameter& param) {
  double a = param.alpha(), b = param.beta();
  Eigen::Vector4cd amps;
  amps << a * a, a * b, a * b, b * b;
  return PureState{amps};
}

PureState apply_oracle(const PureState& state, const MarkedElement& marked) {
  Eigen::Vector4cd amps = state.amplitudes;
  amps(marked.index()) = -amps(marked.index());
  return PureState{amps};
}

CMatrix make_diffusion(const GateParameter& param) {
  CMatrix u = make_u_gate(param);
  CMatrix uu = kron(u, u);
  CMatrix a0 = CMatrix::Identity(4, 4);
  a0(1, 1) = a0(2, 2) = a0(3, 3) = -1;
  return uu * a0 * uu;
}

PureState grover_pure_pipeline(const GateParameter& param,
                               const MarkedElement& marked) {
  PureState psi = apply_oracle(prepare_superposition(param), marked);
  Eigen::Matrix4cd d = make_diffusion(param);
  return PureState{d * psi.amplitudes};
}

double baseline_grover(int num_qubits, std::uint64_t marked, int iterations) {
  if (num_qubits < 1 || num_qubits > 12)
    throw std::invalid_argument("baseline_grover: num_qubits must be 1..12");
  if (iterations < 0)
    throw std::invalid_argument("baseline_grover: iterations must be >= 0");
  std::uint64_t n = std::uint64_t{1} << num_qubits;
  if (marked >= n)
    throw std::invalid_argument("baseline_grover: marked index out of range");

  // Real amplitudes suffice: oracle and diffusion are real.
  double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd state = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n),
                                                    inv_sqrt_n);
  for (int it = 0; it < iterations; ++it) {
    state(static_cast<Eigen::Index>(marked)) *= -1.0;
    // 2|s><s| - I with uniform |s>.
    double mean_term = 2.0 * inv_sqrt_n * (inv_sqrt_n * state.sum());
    state = Eigen::VectorXd::Constant(state.size(), mean_term) - state;
  }
  double amp = state(static_cast<Eigen::Index>(marked));
  return amp * amp;
}

int baseline_optimal_iterations(int num_qubits) {
  double n = std::pow(2.0, num_qubits);
  return static_cast<int>(std::floor(M_PI * std::sqrt(n) / 4.0));
}

}  // namespace qsearch
