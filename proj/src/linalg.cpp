#include "bellcert/linalg.hpp"

namespace bellcert {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  return (a.array() * b.transpose().array()).sum();
}

double hermiticity_residual(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double dichotomicity_residual(const Matrix& o) {
  Matrix r = o * o;
  r.diagonal().array() -= 1.0;
  return r.norm();
}

Matrix partial_trace_bob(const Matrix& full, int d_alice, int d_bob) {
  Matrix out = Matrix::Zero(d_alice, d_alice);
  for (int i = 0; i < d_alice; ++i)
    for (int j = 0; j < d_alice; ++j)
      for (int b = 0; b < d_bob; ++b)
        out(i, j) += full(i * d_bob + b, j * d_bob + b);
  return out;
}

Matrix partial_trace_alice(const Matrix& full, int d_alice, int d_bob) {
  Matrix out = Matrix::Zero(d_bob, d_bob);
  for (int a = 0; a < d_alice; ++a)
    for (int i = 0; i < d_bob; ++i)
      for (int j = 0; j < d_bob; ++j)
        out(i, j) += full(a * d_bob + i, a * d_bob + j);
  return out;
}

}  // namespace bellcert
