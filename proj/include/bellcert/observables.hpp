#pragma once

#include <vector>

#include "bellcert/linalg.hpp"

namespace bellcert {

/// Measurement data for the n-settings inequality: Alice's 2^(n-1) dichotomic
/// observables A_x, Bob's n observables B_y, the scaling weights omega_y, and
/// the scaled combinations cal_A_y with A'_y = omega_y * cal_A_y.
///
/// weights may carry a sign when the source convention signs them; the
/// nonnegative omega_y of the scaling definition is |weights[y]|.
struct ObservableSet {
  int n = 2;
  int d = 2;
  std::vector<Matrix> alice;         // 2^(n-1) of d x d
  std::vector<Matrix> bob;           // n of d x d
  std::vector<double> weights;       // n
  std::vector<Matrix> scaled_alice;  // n of d x d
};

}  // namespace bellcert
