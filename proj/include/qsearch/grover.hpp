#pragma once

#include <cstdint>

#include "qsearch/linalg.hpp"

namespace qsearch {

/// Real superposition-gate parameter. beta is derived as the nonnegative
/// root of 1 - alpha^2, so alpha^2 + beta^2 = 1 holds by construction.
class GateParameter {
 public:
  static GateParameter from_alpha(double alpha);
  static GateParameter from_alpha_sq(double alpha_sq);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double alpha_sq() const { return alpha_ * alpha_; }
  double beta_sq() const { return beta_ * beta_; }

 private:
  GateParameter(double alpha, double beta) : alpha_(alpha), beta_(beta) {}
  double alpha_;
  double beta_;
};

enum class Branch { Plus, Minus };

/// Inverts c = 4 alpha^2 beta^2: alpha^2 = (1 +- sqrt(1-c)) / 2.
GateParameter concurrence_to_alpha(double c, Branch branch);

/// Single marked (solution) basis state of the two-qubit search, 0..3.
/// Default throughout is 1, i.e. |01>.
class MarkedElement {
 public:
  explicit MarkedElement(int index);
  int index() const { return index_; }

 private:
  int index_;
};

/// Normalized two-qubit amplitude vector over |00>,|01>,|10>,|11>.
struct PureState {
  Eigen::Vector4cd amplitudes;

  static PureState from_amplitudes(const Eigen::Vector4cd& amps);
  double probability(int basis_index) const;
};

/// Hermitian, unit-trace, positive-semidefinite 4x4 matrix.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Eigen::Matrix4cd& m);
  static DensityMatrix from_pure(const PureState& psi);

  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  explicit DensityMatrix(const Eigen::Matrix4cd& m) : m_(m) {}
  Eigen::Matrix4cd m_;
};

/// [[alpha, beta], [beta, -alpha]]; unitary and self-inverse.
CMatrix make_u_gate(const GateParameter& param);

/// (U x U)|00> = (alpha^2, alpha beta, alpha beta, beta^2).
PureState prepare_superposition(const GateParameter& param);

/// Flips the sign of the marked amplitude.
PureState apply_oracle(const PureState& state, const MarkedElement& marked);

/// Diffusion operator (U x U) A0 (U x U) with A0 = diag(1,-1,-1,-1).
CMatrix make_diffusion(const GateParameter& param);

/// One full generalized iterate: diffusion(oracle(superposition)).
PureState grover_pure_pipeline(const GateParameter& param,
                               const MarkedElement& marked);

/// Standard n-qubit statevector search with Hadamard initialization.
/// Returns the probability of the marked index after `iterations` iterates.
double baseline_grover(int num_qubits, std::uint64_t marked, int iterations);

/// floor(pi sqrt(2^n) / 4), the usual near-optimal iteration count.
int baseline_optimal_iterations(int num_qubits);

}  // namespace qsearch
