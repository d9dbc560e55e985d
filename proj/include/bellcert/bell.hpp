#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "bellcert/observables.hpp"
#include "bellcert/parallel.hpp"
#include "bellcert/state.hpp"

namespace bellcert {

inline constexpr int kDefaultSettingsCap = 7;

/// Bit (n+1-y) of (x-1), bit 1 = least significant; the sign exponent of the
/// inequality's coefficient matrix.
int z_bit(int n, int y, int x);

/// n x 2^(n-1) matrix with entries M_yx = (-1)^(z_y^x). Row 1 is all ones and
/// distinct rows are orthogonal.
struct SignMatrix {
  int n = 2;
  Eigen::MatrixXi mat;
};

SignMatrix sign_matrix(int n, int settings_cap = kDefaultSettingsCap);

/// Orthogonal 2^(n-1) x 2^(n-1) completion of the sign matrix:
/// mat^T * mat = 2^(n-1) * I exactly.
struct HadamardExtension {
  int n = 2;
  Eigen::MatrixXi mat;
};

/// Default completion: Sylvester-Walsh rows for the remaining multi-bit masks
/// in increasing mask order.
HadamardExtension hadamard_extension(int n, int settings_cap = kDefaultSettingsCap);

/// Any caller-chosen completion; validates orthogonality and that the first n
/// rows equal the sign matrix.
HadamardExtension hadamard_extension_with_rows(int n, const Eigen::MatrixXi& extra_rows,
                                               int settings_cap = kDefaultSettingsCap);

/// Local deterministic bound (floor(n/2)+1) * C(n, floor(n/2)+1).
long local_bound(int n);

/// Independent oracle: exhaustive maximum over deterministic +-1 strategies.
/// Supported for 2 <= n <= 5 (cost grows as 2^(2^(n-1))).
long local_bound_bruteforce(int n, ExecPolicy policy = ExecPolicy::Parallel);

/// Optimal quantum value 2^(n-1) * sqrt(n).
double quantum_optimum(int n);

/// sum_y sum_x (-1)^(z_y^x) Tr[(A_x (x) B_y) rho]. Validates dimensions and
/// dichotomicity of every observable (residual <= 1e-8).
double bell_value(const DensityMatrix& rho, const ObservableSet& obs);
double bell_value(const DensityMatrix& rho, std::span<const Matrix> alice,
                  std::span<const Matrix> bob, int n);

}  // namespace bellcert
