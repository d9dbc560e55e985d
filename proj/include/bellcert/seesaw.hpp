#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellcert/observables.hpp"
#include "bellcert/parallel.hpp"
#include "bellcert/state.hpp"

namespace bellcert {

/// Search domain of the alternating optimization.
///
/// Dichotomic is the unconstrained best-response domain (any O with O^2 = I,
/// including multiples of the identity); it is the ground truth for lower
/// bounds on the Bell optimum. Since deterministic classical strategies embed
/// as O = +-I, its optimum never falls below the local bound on any state.
///
/// Traceless restricts to balanced spectra (Tr O = 0), the spin-observable
/// domain of the CHSH/Horodecki analysis.
///
/// AnticommutingBob additionally constrains Bob's n observables to be
/// mutually anticommuting (orthonormal coefficient rows over a maximal
/// anticommuting Pauli set). This is the domain in which the criterion's
/// saturation statements hold, so it is the oracle for the necessity checks.
enum class SeesawDomain { Dichotomic, Traceless, AnticommutingBob };

struct SeesawConfig {
  int restarts = 20;
  int max_iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 20240915u;
  SeesawDomain domain = SeesawDomain::Dichotomic;
  ExecPolicy policy = ExecPolicy::Parallel;
  /// AnticommutingBob only: also start from every canonical subset frame of
  /// every maximal set (state-independent starts; exact for diagonal T).
  bool canonical_starts = true;
  bool record_trace = false;
};

struct OracleResult {
  double value = 0.0;
  std::vector<Matrix> alice;
  std::vector<Matrix> bob;
  int iterations = 0;     // iterations used by the best start
  int restarts_used = 0;  // total starts explored (canonical + random)
  bool converged = false;
  std::uint64_t seed = 0;
  SeesawDomain domain = SeesawDomain::Dichotomic;
  std::vector<double> trace;  // per-iteration values of the best start
};

/// Alternating best-response maximization of the Bell functional from random
/// (and, in the AnticommutingBob domain, canonical) starts. Deterministic for
/// a fixed seed regardless of thread count: every start owns an independent
/// RNG stream and ties are broken by start index.
OracleResult seesaw(const DensityMatrix& rho, int n, const SeesawConfig& config = {});

/// O = sum_k sign(h_k)|k><k| over H's eigendecomposition, sign(0) := +1.
/// Maximizes Tr[O H] = sum_k |h_k| over O^2 = I.
Matrix sign_decomposition(const Matrix& h);

/// Best traceless dichotomic response: +1 on the upper half of the spectrum,
/// -1 on the lower half (d even).
Matrix balanced_sign_decomposition(const Matrix& h);

std::string domain_name(SeesawDomain d);
SeesawDomain domain_from_name(const std::string& s);

}  // namespace bellcert
