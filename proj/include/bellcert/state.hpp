#pragma once

#include <Eigen/Dense>

#include "bellcert/linalg.hpp"
#include "bellcert/parallel.hpp"
#include "bellcert/pauli.hpp"

namespace bellcert {

/// A bipartite state on H_A (x) H_B with equal local dimension d = 2^m.
/// Constructed through from_matrix, which enforces hermiticity (1e-10),
/// unit trace (1e-10) and positivity (eigenvalues >= -1e-9).
struct DensityMatrix {
  Matrix rho;  // d^2 x d^2
  int m = 1;
  int d = 2;

  static DensityMatrix from_matrix(Matrix rho, int qubit_cap = kDefaultQubitCap);
};

/// (1/4)[I(x)I + sum_i lambda_i sigma_i(x)sigma_i]. Rejects parameter triples
/// outside the state tetrahedron, naming the offending eigenvalue.
DensityMatrix bell_diagonal(double l1, double l2, double l3);

/// w * singlet + (1-w)/4 * identity; equals bell_diagonal(-w,-w,-w).
DensityMatrix werner(double w);

DensityMatrix singlet();

DensityMatrix maximally_mixed(int m);

/// Kronecker power of a two-qubit state with the qubit permutation that
/// groups all of Alice's factors before all of Bob's, so the result lives on
/// H_A^(2^m) (x) H_B^(2^m).
DensityMatrix m_copies(const DensityMatrix& psi, int m, int qubit_cap = kDefaultQubitCap);

/// t_uv = Tr[(tau_u (x) tau'_v) rho] over the non-identity Pauli basis, plus
/// the local Bloch components p_u, q_v. Row/column u corresponds to basis
/// index u+1.
struct CorrelationMatrix {
  int m = 1;
  RealMatrix t;           // (4^m - 1) x (4^m - 1)
  RealVector alice_bloch; // p_u
  RealVector bob_bloch;   // q_v
};

CorrelationMatrix correlation_matrix(const DensityMatrix& rho,
                                     ExecPolicy policy = ExecPolicy::Parallel);

/// Two-qubit Fano data in a local-unitary diagonalizing frame:
/// psi = (U (x) V) psi_diag (U (x) V)^dagger, where psi_diag has correlation
/// matrix diag(lambda) and Bloch vectors r, s.
struct TwoQubitFano {
  Eigen::Vector3d r;       // Alice Bloch, rotated frame
  Eigen::Vector3d s;       // Bob Bloch, rotated frame
  Eigen::Vector3d lambda;  // signed diagonal correlations
  Eigen::Matrix2cd u;
  Eigen::Matrix2cd v;
};

/// Factors T = R diag(lambda) S^T with R,S in SO(3) (improper factors absorb
/// a sign into lambda) and lifts R,S to SU(2) through the double cover.
TwoQubitFano diagonalize_two_qubit(const DensityMatrix& psi);

/// Rebuilds the state from Fano data (round-trip check and `fano` state files).
DensityMatrix reconstruct_two_qubit(const TwoQubitFano& f);

/// SU(2) element realizing a proper rotation: u sigma_a u^dag = sum_b R_ba sigma_b.
Eigen::Matrix2cd su2_from_so3(const Eigen::Matrix3d& r);

}  // namespace bellcert
