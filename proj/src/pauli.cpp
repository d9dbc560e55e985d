#include "bellcert/pauli.hpp"

#include <bit>

#include "bellcert/errors.hpp"

namespace bellcert {

namespace {

// digit -> (x, z)
constexpr int kDigitX[4] = {0, 1, 1, 0};
constexpr int kDigitZ[4] = {0, 0, 1, 1};
constexpr char kDigitChar[4] = {'I', 'X', 'Y', 'Z'};

int digit_from_xz(int x, int z) {
  static constexpr int table[2][2] = {{0, 3}, {1, 2}};  // [x][z]
  return table[x][z];
}

void check_qubit_count(int m, int cap) {
  if (m < 1 || m > cap)
    throw InvalidArgumentError("qubit count m=" + std::to_string(m) +
                               " outside [1, " + std::to_string(cap) + "]");
}

}  // namespace

int PauliString::digit(int k) const {
  int bit = k - 1;
  return digit_from_xz((x_bits >> bit) & 1, (z_bits >> bit) & 1);
}

std::vector<int> PauliString::digits() const {
  std::vector<int> out(m);
  for (int k = 1; k <= m; ++k) out[k - 1] = digit(k);
  return out;
}

int PauliString::index() const {
  int u = 0;
  for (int k = 1; k <= m; ++k) u = 4 * u + digit(k);
  return u;
}

std::string PauliString::label() const {
  std::string s(m, 'I');
  for (int k = 1; k <= m; ++k) s[k - 1] = kDigitChar[digit(k)];
  return s;
}

PauliString PauliString::from_index(int u, int m) {
  if (m < 1 || m > 15) throw InvalidArgumentError("bad qubit count");
  if (u < 0 || u >= (1 << (2 * m)))
    throw InvalidArgumentError("basis index " + std::to_string(u) + " out of range for m=" +
                               std::to_string(m));
  std::vector<int> a(m);
  for (int k = m; k >= 1; --k) {
    a[k - 1] = u & 3;
    u >>= 2;
  }
  return from_digits(a);
}

PauliString PauliString::from_digits(const std::vector<int>& a) {
  PauliString p;
  p.m = static_cast<int>(a.size());
  p.x_bits = p.z_bits = 0;
  for (int k = 1; k <= p.m; ++k) {
    int d = a[k - 1];
    if (d < 0 || d > 3) throw InvalidArgumentError("Pauli digit outside {0,1,2,3}");
    p.x_bits |= static_cast<std::uint32_t>(kDigitX[d]) << (k - 1);
    p.z_bits |= static_cast<std::uint32_t>(kDigitZ[d]) << (k - 1);
  }
  return p;
}

PauliString PauliString::from_label(const std::string& s) {
  std::vector<int> a;
  a.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'I': a.push_back(0); break;
      case 'X': a.push_back(1); break;
      case 'Y': a.push_back(2); break;
      case 'Z': a.push_back(3); break;
      default: throw InvalidArgumentError(std::string("bad Pauli label char '") + c + "'");
    }
  }
  if (a.empty()) throw InvalidArgumentError("empty Pauli label");
  return from_digits(a);
}

std::vector<PauliString> pauli_basis(int m, int qubit_cap) {
  check_qubit_count(m, qubit_cap);
  int count = (1 << (2 * m)) - 1;
  std::vector<PauliString> basis;
  basis.reserve(count);
  for (int u = 1; u <= count; ++u) basis.push_back(PauliString::from_index(u, m));
  return basis;
}

bool anticommutes(const PauliString& p, const PauliString& q) {
  if (p.m != q.m)
    throw InvalidArgumentError("anticommutes: mismatched qubit counts " +
                               std::to_string(p.m) + " vs " + std::to_string(q.m));
  int parity = std::popcount(p.x_bits & q.z_bits) + std::popcount(p.z_bits & q.x_bits);
  return (parity & 1) != 0;
}

const Matrix& pauli_matrix(int digit) {
  static const Matrix mats[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  return mats[digit];
}

Matrix to_dense(const PauliString& p) {
  Matrix out = pauli_matrix(p.digit(1));
  for (int k = 2; k <= p.m; ++k) out = kron(out, pauli_matrix(p.digit(k)));
  return out;
}

PauliProduct multiply(const PauliString& p, const PauliString& q) {
  if (p.m != q.m) throw InvalidArgumentError("multiply: mismatched qubit counts");
  PauliString r;
  r.m = p.m;
  r.x_bits = p.x_bits ^ q.x_bits;
  r.z_bits = p.z_bits ^ q.z_bits;
  // Per-factor phase table for sigma_a * sigma_b = i^k sigma_c.
  static constexpr int kPhase[4][4] = {
      {0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};
  int phase = 0;
  for (int k = 1; k <= p.m; ++k) phase += kPhase[p.digit(k)][q.digit(k)];
  PauliProduct out;
  out.result = r;
  out.phase_quarters = phase & 3;
  return out;
}

}  // namespace bellcert
