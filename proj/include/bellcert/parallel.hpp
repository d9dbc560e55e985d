#pragma once

namespace bellcert {

/// Execution policy for the data-parallel kernels. Every parallel kernel keeps
/// a serial reference path; both produce identical results and the test suite
/// compares them.
enum class ExecPolicy { Serial, Parallel };

/// Number of threads the Parallel policy will use (1 if OpenMP is disabled).
int effective_threads();

/// Applies the BELLCERT_THREADS environment variable, if set, as a cap on
/// OpenMP parallelism. Returns the resulting thread count.
int apply_thread_cap_from_env();

}  // namespace bellcert
