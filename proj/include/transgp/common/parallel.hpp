#ifndef TRANSGP_COMMON_PARALLEL_HPP_
#define TRANSGP_COMMON_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace transgp {

// Runs body(i) for i in [0, n) on up to `threads` workers. Work items must be
// independent; results are written by index so the outcome does not depend on
// the schedule. threads <= 1 runs inline. The first exception thrown by any
// item is rethrown after all workers join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

// Worker count to use when the caller passes 0.
int default_thread_count();

}  // namespace transgp

#endif  // TRANSGP_COMMON_PARALLEL_HPP_
