#pragma once

#include <cmath>

namespace powerspectra::kernels::detail {

struct Rotation {
  double c = 1.0;
  double s = 0.0;
};

// Rotation that annihilates the (p, q) entry of the 2x2 symmetric block
// [[app, apq], [apq, aqq]] under J^T A J with J = [[c, s], [-s, c]].
inline Rotation schur2(double app, double apq, double aqq) {
  if (apq == 0.0) return {};
  const double tau = (aqq - app) / (2.0 * apq);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c};
}

}  // namespace powerspectra::kernels::detail
