#pragma once

#include <cstddef>

namespace stokes::kernels {

/// Thread cap for the OpenMP kernels. 0 means "use the OpenMP default".
/// Initialised once from the STOKES_RESUM_THREADS environment variable.
void set_threads(int n);
int threads();
void init_from_env();

/// Work-size threshold below which the parallel kernels fall back to the
/// serial path (spawning threads costs more than the product).
constexpr std::size_t kParallelCutoff = 4096;

bool parallel_enabled(std::size_t work);

} // namespace stokes::kernels
