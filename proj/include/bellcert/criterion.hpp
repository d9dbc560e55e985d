#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bellcert/anticommuting.hpp"
#include "bellcert/bell.hpp"
#include "bellcert/state.hpp"

namespace bellcert {

enum class Verdict { Violates, Inconclusive };

/// Result of the state criterion M_n. The verdict certifies violation when
/// margin > 0; otherwise it is inconclusive, except in the necessity regimes
/// (two-qubit n in {2,3}, Bell-diagonal m-copies, local-unitary-diagonalized
/// frames) where `exact` is set and a non-violation verdict is conclusive.
struct CriterionReport {
  int n = 2;
  int m = 1;
  double m_n_value = 0.0;
  AnticommutingSet best_alice_subset;  // n members
  AnticommutingSet best_bob_set;       // 2m+1 members
  double threshold = 0.0;              // 2^(1-n) * local_bound(n)
  Verdict verdict = Verdict::Inconclusive;
  double margin = 0.0;                 // m_n_value - threshold
  double bell_lower_bound = 0.0;       // 2^(n-1) * m_n_value
  bool exact = false;
  std::vector<double> singular_values;  // diagonal frame, when one was used
};

/// M_n(rho): maximal restricted correlation mass over Alice n-subsets of
/// maximal anticommuting sets and Bob maximal sets. Two-qubit states are
/// first brought to their local-unitary diagonal frame, which makes the
/// result frame-independent and recovers the CHSH criterion at n=2.
CriterionReport m_n(const DensityMatrix& rho, int n,
                    ExecPolicy policy = ExecPolicy::Parallel);

struct ViolationResult {
  bool violates = false;
  double margin = 0.0;
};

ViolationResult violates(const DensityMatrix& rho, int n,
                         ExecPolicy policy = ExecPolicy::Parallel);

/// Closed-form criterion for m copies of a Bell-diagonal state: the composite
/// correlation matrix is diagonal with entries given by products of lambda
/// components, and the search reduces to picking the best n squared diagonal
/// entries within one maximal set. Exact (necessary and sufficient).
CriterionReport m_n_bell_diagonal(const Eigen::Vector3d& lambda, int n, int m);

struct TwoQubitCriterion {
  double value = 0.0;      // sqrt(mu1+mu2+mu3) resp. mu(1)+mu(2)
  double threshold = 0.0;
  bool violates = false;
  std::vector<double> mu;  // eigenvalues of T T^T, descending
};

/// n=3 two-qubit specialization: sqrt of the full squared correlation mass,
/// compared against threshold 3/2 (= 2^(1-3) * 6; the general bound, not the
/// misprinted 2/3). Necessary and sufficient.
TwoQubitCriterion m3_two_qubit(const DensityMatrix& rho);

/// CHSH reduction: mu(1)+mu(2), the two largest eigenvalues of T^T T.
/// Violation iff > 1; maximal CHSH value over spin observables is
/// 2*sqrt(mu(1)+mu(2)). Equals m_n(rho,2).m_n_value^2.
TwoQubitCriterion horodecki_chsh(const DensityMatrix& rho);

/// Criterion for a state whose correlation matrix the supplied local unitary
/// frame diagonalizes: verifies the frame (off-diagonal residual <= 1e-8,
/// else FrameRejectedError), then evaluates M_n in the rotated basis. Exact
/// for such states.
CriterionReport m_n_with_frame(const DensityMatrix& rho_tilde, const Matrix& u,
                               const Matrix& v, int n,
                               ExecPolicy policy = ExecPolicy::Parallel);

/// Search core shared by the criterion paths: maximizes the restricted mass
/// over (alice subset, bob maximal set) pairs on a given correlation matrix.
struct MnSearchResult {
  double value = 0.0;
  AnticommutingSet alice;
  AnticommutingSet bob;
};
MnSearchResult m_n_search(const RealMatrix& t, int m, int n,
                          ExecPolicy policy = ExecPolicy::Parallel);

std::string verdict_name(Verdict v);

}  // namespace bellcert
