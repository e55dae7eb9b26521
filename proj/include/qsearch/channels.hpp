#pragma once

#include <vector>

#include "qsearch/grover.hpp"
#include "qsearch/linalg.hpp"

namespace qsearch {

enum class ChannelKind { Amplitude, Phase };
enum class TargetQubit { First, Second };

/// Single-qubit Kraus channel: operators satisfy sum E_k^dag E_k = I.
struct KrausChannel {
  ChannelKind kind;
  double p;
  std::vector<Eigen::Matrix2cd> operators;
};

/// E0 = [[1, 0], [0, sqrt(1-p)]], E1 = [[0, sqrt(p)], [0, 0]].
KrausChannel amplitude_damping(double p);

/// E0 = [[1, 0], [0, sqrt(1-p)]], E1 = [[0, 0], [0, sqrt(p)]].
KrausChannel phase_damping(double p);

/// sum (lifted E_k) rho (lifted E_k)^dag, with E_k lifted as I x E_k for
/// the second qubit and E_k x I for the first.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            TargetQubit target = TargetQubit::Second);

}  // namespace qsearch
