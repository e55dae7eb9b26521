#pragma once

#include <array>

#include "qsearch/grover.hpp"
#include "qsearch/linalg.hpp"

namespace qsearch {

/// Pauli-basis expansion of a two-qubit density matrix:
/// rho = 1/4 (I x I + r.sigma x I + I x s.sigma + sum t_ij sigma_i x sigma_j).
struct BlochDecomposition {
  Eigen::Vector3d r;  // first-qubit Bloch vector
  Eigen::Vector3d s;  // second-qubit Bloch vector
  Eigen::Matrix3d t;  // correlation matrix

  Eigen::Matrix4cd reconstruct() const;
};

/// Prefactor of the geometric-discord formula. PaperHalf uses 1/2, the scale
/// the audited closed forms are stated in; DakicQuarter uses the more common
/// 1/4 normalization.
enum class DiscordNormalization { PaperHalf, DakicQuarter };

/// |<psi|psi~>| with |psi~> = (sigma_y x sigma_y)|psi*>.
double concurrence_pure(const PureState& psi);

/// Wootters concurrence max{0, l0 - l1 - l2 - l3} where l_i are the square
/// roots (clamped at zero) of the eigenvalues of rho * spinflip(rho),
/// computed as the singular values of sqrt(spinflip(rho)) * sqrt(rho) for
/// accuracy near zero.
double concurrence_mixed(const DensityMatrix& rho);

BlochDecomposition bloch_decompose(const DensityMatrix& rho);

/// prefactor * (|x|^2 + |T|^2 - k_max), with x the Bloch vector of the
/// measured (second) qubit and k_max the largest eigenvalue of
/// x x^T + T^T T. Clamped at zero.
double geometric_discord(const DensityMatrix& rho,
                         DiscordNormalization norm = DiscordNormalization::PaperHalf);

/// Diagonal of D rho D: the measurement probabilities after the diffusion
/// stage. Entries clamped into [0, 1], ordered |00>,|01>,|10>,|11>.
std::array<double, 4> final_probabilities(const DensityMatrix& rho,
                                          const GateParameter& param);

}  // namespace qsearch
