#pragma once

#include <stdexcept>
#include <string>

namespace bellcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range settings, mismatched qubit counts, etc.
struct InvalidArgumentError : Error {
  using Error::Error;
};

/// A matrix that fails the density-matrix checks (hermiticity, trace, positivity).
struct InvalidStateError : Error {
  using Error::Error;
};

/// A correlation row with zero mass, for which Bob's observable is undefined.
struct DegenerateRowError : Error {
  using Error::Error;
};

/// Observable construction produced a non-dichotomic operator beyond tolerance.
struct ConstructionError : Error {
  using Error::Error;
};

/// Supplied local-unitary frame does not diagonalize the correlation matrix.
struct FrameRejectedError : Error {
  FrameRejectedError(const std::string& msg, double residual)
      : Error(msg), residual(residual) {}
  double residual;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace bellcert
