#pragma once

#include <cstddef>
#include <functional>

namespace dyqg {

// Worker count: hardware concurrency capped by DYQG_THREADS.
unsigned thread_count();

// Runs f(i) for i in [0, n). Each index writes only its own output, so the
// result does not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace dyqg
