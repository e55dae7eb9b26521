#include "qsearch/channels.hpp"

#include <cmath>

namespace qsearch {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(what) + ": p must lie in [0, 1]");
}

}  // namespace

KrausChannel amplitude_damping(double p) {
  check_probability(p, "amplitude_damping");
  Eigen::Matrix2cd e0, e1;
  e0 << 1, 0, 0, std::sqrt(1.0 - p);
  e1 << 0, std::sqrt(p), 0, 0;
  return KrausChannel{ChannelKind::Amplitude, p, {e0, e1}};
}

KrausChannel phase_damping(double p) {
  check_probability(p, "phase_damping");
  Eigen::Matrix2cd e0, e1;
  e0 << 1, 0, 0, std::sqrt(1.0 - p);
  e1 << 0, 0, 0, std::sqrt(p);
  return KrausChannel{ChannelKind::Phase, p, {e0, e1}};
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            TargetQubit target) {
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (const Eigen::Matrix2cd& e : channel.operators) {
    CMatrix lifted = target == TargetQubit::Second ? kron(id, e) : kron(e, id);
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return DensityMatrix::from_matrix(out);
}

}  // namespace qsearch
