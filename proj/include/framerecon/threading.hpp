#pragma once

#include <cstddef>
#include <functional>

namespace framerecon::threading {

/// Worker pool size used by parallel_for and run_table. 0 means "use
/// hardware concurrency". FRAME_RECON_THREADS is consulted when no explicit
/// size has been set.
void set_pool_size(int n);
int pool_size();

/// Runs fn(i) for i in [0, count). Work items must be independent (each
/// writes only its own slots), so the result is identical for every pool
/// size.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace framerecon::threading
