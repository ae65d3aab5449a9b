#pragma once

#include <cstddef>
#include <functional>

namespace isotropic {

// Worker count: GIAMBELLI_THREADS if set, else hardware concurrency.
unsigned default_threads();

// Calls fn(i) for i in [0, n) on up to `threads` workers, handing out
// indices dynamically. The first exception thrown by fn is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

}  // namespace isotropic
