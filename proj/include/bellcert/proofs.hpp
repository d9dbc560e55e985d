#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace bellcert {

/// The 0/1 anticommutator-constraint matrix: rows indexed by pairs (y, y'),
/// y < y' <= n, in lexicographic order; column j (1-based) carries
/// z_y^(j+1) XOR z_y'^(j+1). Full rank forces all anticommutators to vanish.
struct ConstraintMatrix {
  int n = 2;
  Eigen::MatrixXi entries;                      // n(n-1)/2 x (2^(n-1) - 1)
  std::vector<std::pair<int, int>> row_labels;  // (y, y')
};

ConstraintMatrix constraint_matrix(int n);  // 2 <= n <= 16

struct RankResult {
  int rank = 0;
  bool full = false;  // rank == n(n-1)/2
};

/// Rank over the rationals by exact fraction-free (Bareiss) elimination with
/// arbitrary-precision integers. The row reduction that proves full rank uses
/// coefficient -2, so GF(2) arithmetic would be wrong here.
RankResult rank_full(int n);

/// Diagnostic reproduction of the block reduction: columns reordered into
/// weight-k blocks, then rows (y,y') with y >= 2 replaced by
/// row(y,y') - row(1,y) - row(1,y'). The leading n(n-1)/2 square becomes
/// upper triangular with diagonal (1,...,1,-2,...,-2).
struct ReductionDisplay {
  std::vector<int> column_order;  // 1-based original column of each new column
  Eigen::MatrixXi reduced;        // full reduced matrix in the new column order
  bool upper_triangular = false;
  std::vector<int> diagonal;
};

ReductionDisplay reduction_display(int n);

/// Exact integer check that the Hadamard extension satisfies
/// Mext^T Mext = 2^(n-1) I.
bool hadamard_orthogonal_exact(int n);

}  // namespace bellcert
