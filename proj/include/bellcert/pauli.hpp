#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellcert/linalg.hpp"

namespace bellcert {

/// Dense kernels work on at most this many qubits per side (d = 16) unless a
/// caller raises the cap explicitly.
inline constexpr int kDefaultQubitCap = 4;

/// An m-qubit Pauli string in symplectic encoding. Bit k (0-based) of
/// x_bits/z_bits belongs to tensor factor k+1, factor 1 leftmost. Digit
/// (x,z) -> 0:I (0,0), 1:X (1,0), 2:Y (1,1), 3:Z (0,1).
struct PauliString {
  int m = 1;
  std::uint32_t x_bits = 0;
  std::uint32_t z_bits = 0;

  /// Base-4 digit of factor k (1-based), in {0,1,2,3}.
  int digit(int k) const;
  std::vector<int> digits() const;

  /// Basis index u = sum_k a_k 4^(m-k) in [0, 4^m - 1]; 0 is the identity.
  int index() const;
  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  /// e.g. "ZX" for sigma_z (x) sigma_x.
  std::string label() const;

  static PauliString from_index(int u, int m);
  static PauliString from_digits(const std::vector<int>& a);
  static PauliString from_label(const std::string& s);

  bool operator==(const PauliString& o) const = default;
};

/// The 4^m - 1 non-identity strings in basis-index order (u = 1..4^m-1).
std::vector<PauliString> pauli_basis(int m, int qubit_cap = kDefaultQubitCap);

/// True iff {p, q} = 0. Symplectic parity test; throws on mismatched m.
bool anticommutes(const PauliString& p, const PauliString& q);

/// Dense 2^m x 2^m matrix, Kronecker product of the single-qubit factors.
Matrix to_dense(const PauliString& p);

/// p*q = i^phase_quarters * result, phase_quarters in {0,1,2,3}.
struct PauliProduct {
  PauliString result;
  int phase_quarters;
};
PauliProduct multiply(const PauliString& p, const PauliString& q);

const Matrix& pauli_matrix(int digit);  // 0:I, 1:X, 2:Y, 3:Z (2x2)

}  // namespace bellcert
