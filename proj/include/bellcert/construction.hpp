#pragma once

#include <Eigen/Dense>

#include "bellcert/anticommuting.hpp"
#include "bellcert/observables.hpp"
#include "bellcert/state.hpp"

namespace bellcert {

/// Builds the observables that attain Bell value 2^(n-1) * sqrt(restricted
/// correlation mass) for the chosen anticommuting sets:
///   B_y = sum_v (t_yv / sqrt(row mass)) tau'_v over s_bob,
///   A_x = (1/sqrt(total mass)) sum_y Mext^T_xy sqrt(row mass_y) tau_y.
/// Throws DegenerateRowError when a row of s_alice has zero mass and
/// ConstructionError if any A_x fails dichotomicity beyond 1e-8.
ObservableSet construct(const DensityMatrix& rho, int n, const AnticommutingSet& s_alice,
                        const AnticommutingSet& s_bob);

/// Residual record for the saturation conditions on a set of observables.
struct Proposition1Checks {
  double max_anticommutator_residual = 0.0;  // (a) {cal_A_y, cal_A_y'} = 0
  bool anticommuting_ok = false;
  double weight_square_sum = 0.0;            // (b) sum omega_y^2 = 4^(n-1)
  bool weights_ok = false;
  double max_extension_row_residual = 0.0;   // (c) A'_y = 0 for y > n
  bool extension_rows_ok = false;
  double max_scaled_trace = 0.0;             // (d) Tr[cal_A_y] = 0
  bool traceless_ok = false;

  bool all_ok() const {
    return anticommuting_ok && weights_ok && extension_rows_ok && traceless_ok;
  }
};

Proposition1Checks verify_proposition1(const ObservableSet& obs, const DensityMatrix& rho);

/// n=3 construction for an arbitrary two-qubit state: diagonalizes the state,
/// aligns cal_A_y and B_y with the diagonal frame's Pauli axes weighted by the
/// singular values, rotates everything back to the original frame. Zero
/// singular-value rows drop out; all-zero correlations are degenerate.
ObservableSet construct_n3(const DensityMatrix& psi);

/// The worked two-copy Bell-diagonal n=4 construction, exactly as listed:
/// cal_A = {ZX, ZY, ZZ, YI}, primed counterparts for Bob, signed weights
/// 8{l1 l3, l2 l3, l3^2, l2}/sqrt(l2^2 + l3^2 |l|^2). Requires magnitude-
/// ascending lambda (|l1| <= |l2| <= |l3|) and Bell-diagonal positivity.
/// Achieves Bell value 8 sqrt(l3^2 |l|^2 + l2^2) on the two-copy state, which
/// is the listed subset's mass; the criterion search may exceed it.
ObservableSet appendix_b(const Eigen::Vector3d& lambda);

}  // namespace bellcert
