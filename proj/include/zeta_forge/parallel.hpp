#pragma once

#include <cstddef>
#include <functional>

namespace zeta_forge {

/// Worker cap: ZETA_FORGE_THREADS when set to an integer >= 1, otherwise the
/// hardware concurrency. Invalid values fall back to 1.
unsigned max_threads();

/// Calls body(i) for i in [0, count) on up to max_threads() threads. Each
/// index is visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace zeta_forge
