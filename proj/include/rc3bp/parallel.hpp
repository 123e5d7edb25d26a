#pragma once

#include <cstddef>
#include <functional>

namespace rc3bp {

/// Worker count: RC3BP_THREADS when set to a positive integer, else the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) over contiguous blocks. Each index is visited once.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rc3bp
