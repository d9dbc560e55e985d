#include "bellcert/bell.hpp"

#include <bit>
#include <cmath>

#include "bellcert/errors.hpp"

namespace bellcert {

namespace {

void check_settings(int n, int cap) {
  if (n < 2 || n > cap)
    throw InvalidArgumentError("settings n=" + std::to_string(n) + " outside [2, " +
                               std::to_string(cap) + "]");
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Eigen::RowVectorXi walsh_row(int mask, int cols) {
  Eigen::RowVectorXi row(cols);
  for (int x = 0; x < cols; ++x)
    row(x) = (std::popcount(static_cast<unsigned>(mask & x)) & 1) ? -1 : 1;
  return row;
}

}  // namespace

int z_bit(int n, int y, int x) { return ((x - 1) >> (n - y)) & 1; }

SignMatrix sign_matrix(int n, int settings_cap) {
  check_settings(n, settings_cap);
  const int cols = 1 << (n - 1);
  SignMatrix s;
  s.n = n;
  s.mat.resize(n, cols);
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= cols; ++x) s.mat(y - 1, x - 1) = z_bit(n, y, x) ? -1 : 1;
  return s;
}

HadamardExtension hadamard_extension(int n, int settings_cap) {
  check_settings(n, settings_cap);
  const int cols = 1 << (n - 1);
  SignMatrix s = sign_matrix(n, settings_cap);
  HadamardExtension h;
  h.n = n;
  h.mat.resize(cols, cols);
  h.mat.topRows(n) = s.mat;
  // Rows 1..n are the Walsh rows for mask 0 and the single-bit masks; the
  // completion appends the remaining masks in increasing order.
  int row = n;
  for (int mask = 0; mask < cols; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) < 2) continue;
    h.mat.row(row++) = walsh_row(mask, cols);
  }
  return h;
}

HadamardExtension hadamard_extension_with_rows(int n, const Eigen::MatrixXi& extra_rows,
                                               int settings_cap) {
  check_settings(n, settings_cap);
  const int cols = 1 << (n - 1);
  if (extra_rows.rows() != cols - n || extra_rows.cols() != cols)
    throw InvalidArgumentError("completion must supply 2^(n-1) - n rows of width 2^(n-1)");
  HadamardExtension h;
  h.n = n;
  h.mat.resize(cols, cols);
  h.mat.topRows(n) = sign_matrix(n, settings_cap).mat;
  h.mat.bottomRows(cols - n) = extra_rows;
  Eigen::MatrixXi gram = h.mat.transpose() * h.mat;
  Eigen::MatrixXi expect = Eigen::MatrixXi::Identity(cols, cols) * cols;
  if (gram != expect) throw InvalidArgumentError("completion rows are not orthogonal");
  return h;
}

long local_bound(int n) {
  if (n < 2) throw InvalidArgumentError("local_bound requires n >= 2");
  int k = n / 2 + 1;
  return static_cast<long>(k) * binomial(n, k);
}

long local_bound_bruteforce(int n, ExecPolicy policy) {
  if (n < 2 || n > 5)
    throw InvalidArgumentError("local_bound_bruteforce supports n in [2, 5] only");
  const int cols = 1 << (n - 1);
  const std::uint64_t patterns = 1ull << cols;
  SignMatrix s = sign_matrix(n);
  // Bob's optimal response to fixed Alice signs is sign(row sum), so only
  // Alice's 2^(2^(n-1)) assignments are enumerated.
  long best = 0;
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) reduction(max : best) if (par)
  for (std::int64_t bits = 0; bits < static_cast<std::int64_t>(patterns); ++bits) {
    long total = 0;
    for (int y = 0; y < n; ++y) {
      long row = 0;
      for (int x = 0; x < cols; ++x) {
        int a = (bits >> x) & 1 ? 1 : -1;
        row += s.mat(y, x) * a;
      }
      total += std::abs(row);
    }
    best = std::max(best, total);
  }
  return best;
}

double quantum_optimum(int n) {
  if (n < 2) throw InvalidArgumentError("quantum_optimum requires n >= 2");
  return std::ldexp(std::sqrt(static_cast<double>(n)), n - 1);
}

double bell_value(const DensityMatrix& rho, std::span<const Matrix> alice,
                  std::span<const Matrix> bob, int n) {
  check_settings(n, kDefaultSettingsCap);
  const int cols = 1 << (n - 1);
  if (static_cast<int>(alice.size()) != cols)
    throw InvalidArgumentError("expected " + std::to_string(cols) + " Alice observables, got " +
                               std::to_string(alice.size()));
  if (static_cast<int>(bob.size()) != n)
    throw InvalidArgumentError("expected " + std::to_string(n) + " Bob observables");
  const int d = rho.d;
  constexpr double kDichTol = 1e-8;
  for (std::size_t i = 0; i < alice.size(); ++i) {
    if (alice[i].rows() != d || alice[i].cols() != d)
      throw InvalidArgumentError("Alice observable " + std::to_string(i + 1) +
                                 " has wrong dimension");
    double r = dichotomicity_residual(alice[i]);
    if (r > kDichTol)
      throw InvalidArgumentError("Alice observable " + std::to_string(i + 1) +
                                 " is not dichotomic (residual " + std::to_string(r) + ")");
  }
  for (std::size_t i = 0; i < bob.size(); ++i) {
    if (bob[i].rows() != d || bob[i].cols() != d)
      throw InvalidArgumentError("Bob observable " + std::to_string(i + 1) +
                                 " has wrong dimension");
    double r = dichotomicity_residual(bob[i]);
    if (r > kDichTol)
      throw InvalidArgumentError("Bob observable " + std::to_string(i + 1) +
                                 " is not dichotomic (residual " + std::to_string(r) + ")");
  }
  SignMatrix s = sign_matrix(n);
  double value = 0.0;
  for (int y = 0; y < n; ++y) {
    Matrix a_prime = Matrix::Zero(d, d);
    for (int x = 0; x < cols; ++x) a_prime += static_cast<double>(s.mat(y, x)) * alice[x];
    value += trace_product(rho.rho, kron(a_prime, bob[y])).real();
  }
  return value;
}

double bell_value(const DensityMatrix& rho, const ObservableSet& obs) {
  return bell_value(rho, obs.alice, obs.bob, obs.n);
}

}  // namespace bellcert
