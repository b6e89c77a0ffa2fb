#pragma once

namespace viracomb {

// Thread budget for the OpenMP kernels: VIRACOMB_THREADS if set and
// positive, otherwise the OpenMP default.
int thread_count();

}  // namespace viracomb
