#pragma once

#include <cstddef>
#include <functional>

namespace augraph {

// Process-wide worker cap for data-parallel loops. 0 means "all cores".
void set_thread_cap(std::size_t n);
std::size_t thread_cap();

// Runs fn(0) .. fn(count - 1), partitioned across at most thread_cap()
// workers. fn must be safe to call concurrently for distinct indices; results
// are schedule-independent because indices never overlap.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace augraph
