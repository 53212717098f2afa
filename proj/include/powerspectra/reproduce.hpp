#pragma once

#include <string>
#include <vector>

namespace powerspectra {

struct ReproductionCheck {
  std::string label;
  double expected = 0.0;
  double computed = 0.0;
  bool pass = false;
};

/// Recomputes the published worked examples: Z_6, D_12, Q_12 and the
/// prime-power closed forms for D_{2p^m} and Q_{2^{m+2}}.
std::vector<ReproductionCheck> reproduce_examples(double tol = 1e-4);

}  // namespace powerspectra
