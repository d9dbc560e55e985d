#include "bellcert/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "bellcert/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellcert {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-9;

int log2_exact(int d) {
  int m = 0;
  while ((1 << m) < d) ++m;
  return ((1 << m) == d) ? m : -1;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Matrix rho, int qubit_cap) {
  const auto dim = rho.rows();
  if (dim != rho.cols()) throw InvalidStateError("density matrix is not square");
  int m2 = log2_exact(static_cast<int>(dim));
  if (m2 < 2 || m2 % 2 != 0)
    throw InvalidStateError("dimension " + std::to_string(dim) +
                            " is not 4^m for a bipartite qubit register");
  int m = m2 / 2;
  if (m > qubit_cap)
    throw InvalidStateError("m=" + std::to_string(m) + " exceeds qubit cap " +
                            std::to_string(qubit_cap));
  double herm = hermiticity_residual(rho);
  if (herm > kHermTol)
    throw InvalidStateError("not Hermitian within 1e-10 (residual " + std::to_string(herm) + ")");
  double tr = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr > kTraceTol)
    throw InvalidStateError("trace differs from 1 by " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdTol)
    throw InvalidStateError("not positive semidefinite: min eigenvalue " +
                            std::to_string(min_eig));
  DensityMatrix out;
  out.rho = std::move(rho);
  out.m = m;
  out.d = 1 << m;
  return out;
}

DensityMatrix bell_diagonal(double l1, double l2, double l3) {
  const double eigs[4] = {
      (1 - l1 - l2 - l3) / 4, (1 - l1 + l2 + l3) / 4,
      (1 + l1 - l2 + l3) / 4, (1 + l1 + l2 - l3) / 4};
  for (int k = 0; k < 4; ++k)
    if (eigs[k] < -1e-12)
      throw InvalidStateError("bell_diagonal(" + std::to_string(l1) + ", " +
                              std::to_string(l2) + ", " + std::to_string(l3) +
                              "): eigenvalue " + std::to_string(k + 1) + " = " +
                              std::to_string(eigs[k]) + " < 0");
  Matrix rho = Matrix::Identity(4, 4);
  const double l[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    const Matrix& s = pauli_matrix(i + 1);
    rho += l[i] * kron(s, s);
  }
  rho *= 0.25;
  DensityMatrix out;
  out.rho = std::move(rho);
  out.m = 1;
  out.d = 2;
  return out;
}

DensityMatrix werner(double w) { return bell_diagonal(-w, -w, -w); }

DensityMatrix singlet() { return bell_diagonal(-1, -1, -1); }

DensityMatrix maximally_mixed(int m) {
  DensityMatrix out;
  int dim = 1 << (2 * m);
  out.rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  out.m = m;
  out.d = 1 << m;
  return out;
}

DensityMatrix m_copies(const DensityMatrix& psi, int m, int qubit_cap) {
  if (psi.m != 1) throw InvalidArgumentError("m_copies expects a two-qubit state");
  if (m < 1 || m > qubit_cap)
    throw InvalidArgumentError("m_copies: m=" + std::to_string(m) + " outside [1, " +
                               std::to_string(qubit_cap) + "]");
  if (m == 1) return psi;
  Matrix big = psi.rho;
  for (int k = 1; k < m; ++k) big = kron(big, psi.rho);
  // Kron index bits (MSB first): a_1 b_1 a_2 b_2 ... a_m b_m.
  // Target layout: a_1 ... a_m b_1 ... b_m.
  const int nbits = 2 * m;
  const int dim = 1 << nbits;
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) {
    int out_index = 0;
    for (int k = 0; k < m; ++k) {
      int a = (i >> (nbits - 1 - 2 * k)) & 1;
      int b = (i >> (nbits - 2 - 2 * k)) & 1;
      out_index |= a << (nbits - 1 - k);
      out_index |= b << (m - 1 - k);
    }
    perm[i] = out_index;
  }
  Matrix rearranged(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rearranged(perm[i], perm[j]) = big(i, j);
  DensityMatrix out;
  out.rho = std::move(rearranged);
  out.m = m;
  out.d = 1 << m;
  return out;
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho, ExecPolicy policy) {
  const int m = rho.m;
  const int d = rho.d;
  const int nb = d * d - 1;
  std::vector<PauliString> basis = pauli_basis(m);
  std::vector<Matrix> dense(nb);
  for (int u = 0; u < nb; ++u) dense[u] = to_dense(basis[u]);

  CorrelationMatrix out;
  out.m = m;
  out.t.resize(nb, nb);
  out.alice_bloch.resize(nb);
  out.bob_bloch.resize(nb);

  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int u = 0; u < nb; ++u) {
    // K_u = Tr_A[rho (tau_u (x) I)], so t_uv = Re Tr[K_u tau'_v].
    Matrix ku = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int ap = 0; ap < d; ++ap) {
        const Complex w = dense[u](ap, a);
        if (w == Complex(0, 0)) continue;
        ku += w * rho.rho.block(a * d, ap * d, d, d);
      }
    for (int v = 0; v < nb; ++v) out.t(u, v) = trace_product(ku, dense[v]).real();
    out.alice_bloch(u) = ku.trace().real();
  }
  const Matrix rho_b = partial_trace_alice(rho.rho, d, d);
  for (int v = 0; v < nb; ++v) out.bob_bloch(v) = trace_product(rho_b, dense[v]).real();
  return out;
}

Eigen::Matrix2cd su2_from_so3(const Eigen::Matrix3d& r) {
  // Quaternion extraction (Shepperd), then u = w*I - i (x sx + y sy + z sz).
  double t = r.trace();
  double w, x, y, z;
  if (t > 0) {
    double s = std::sqrt(t + 1.0) * 2;
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2;
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2;
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2;
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  const Complex im(0, 1);
  u += w * Eigen::Matrix2cd::Identity();
  u -= im * x * Eigen::Matrix2cd(pauli_matrix(1));
  u -= im * y * Eigen::Matrix2cd(pauli_matrix(2));
  u -= im * z * Eigen::Matrix2cd(pauli_matrix(3));
  return u;
}

TwoQubitFano diagonalize_two_qubit(const DensityMatrix& psi) {
  if (psi.m != 1) throw InvalidArgumentError("diagonalize_two_qubit expects a two-qubit state");
  CorrelationMatrix c = correlation_matrix(psi, ExecPolicy::Serial);
  Eigen::Matrix3d t = c.t;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d ru = svd.matrixU();
  Eigen::Matrix3d rv = svd.matrixV();
  Eigen::Vector3d lambda = svd.singularValues();
  // Absorb improper factors into the last diagonal entry so both rotations
  // are proper and admit SU(2) lifts.
  if (ru.determinant() < 0) {
    ru.col(2) *= -1;
    lambda(2) *= -1;
  }
  if (rv.determinant() < 0) {
    rv.col(2) *= -1;
    lambda(2) *= -1;
  }
  TwoQubitFano f;
  f.lambda = lambda;
  f.r = ru.transpose() * Eigen::Vector3d(c.alice_bloch.head<3>());
  f.s = rv.transpose() * Eigen::Vector3d(c.bob_bloch.head<3>());
  f.u = su2_from_so3(ru);
  f.v = su2_from_so3(rv);
  return f;
}

DensityMatrix reconstruct_two_qubit(const TwoQubitFano& f) {
  Matrix rho = Matrix::Identity(4, 4);
  for (int i = 0; i < 3; ++i) {
    const Matrix& s = pauli_matrix(i + 1);
    rho += f.r(i) * kron(s, Matrix::Identity(2, 2));
    rho += f.s(i) * kron(Matrix::Identity(2, 2), s);
    rho += f.lambda(i) * kron(s, s);
  }
  rho *= 0.25;
  Matrix uv = kron(f.u, f.v);
  rho = uv * rho * uv.adjoint();
  return DensityMatrix::from_matrix(std::move(rho));
}

}  // namespace bellcert
