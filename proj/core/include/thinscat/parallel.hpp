#pragma once

#include <cstddef>
#include <functional>

namespace thinscat {

//! Caps the number of worker threads used by data-parallel loops (0 = all
//! hardware threads). Process-wide.
void set_max_threads(unsigned count);
unsigned max_threads();

/*!
 * Calls body(i) for i in [0, count), split into contiguous static chunks
 * across at most max_threads() workers. Each index is visited exactly once;
 * body must not write shared state other than its own output slot, so the
 * result does not depend on the partitioning.
 */
void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body);

}  // namespace thinscat
