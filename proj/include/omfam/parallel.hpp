#pragma once

namespace omfam {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Execution { Serial, Parallel };

/// Worker count for the OpenMP kernels: OMFAM_THREADS if set to a positive
/// integer (capped by the OpenMP default), otherwise the OpenMP default.
int thread_count();

}  // namespace omfam
