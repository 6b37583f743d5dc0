#pragma once

#include <cstddef>
#include <functional>

namespace jumpspec {

/// Runs fn(i) for i in [0, n) across up to `workers` threads with static
/// chunking. Results must be written to per-index slots; with that
/// discipline the outcome is independent of the worker count.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

int default_workers();

}  // namespace jumpspec
