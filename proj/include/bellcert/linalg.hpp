#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bellcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

Matrix kron(const Matrix& a, const Matrix& b);

inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

/// Tr[a b] without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

double hermiticity_residual(const Matrix& a);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Frobenius norm of (o*o - identity).
double dichotomicity_residual(const Matrix& o);

/// Tr_B of a (dA*dB) x (dA*dB) matrix, giving a dA x dA matrix.
Matrix partial_trace_bob(const Matrix& full, int d_alice, int d_bob);

/// Tr_A, giving a dB x dB matrix.
Matrix partial_trace_alice(const Matrix& full, int d_alice, int d_bob);

}  // namespace bellcert
