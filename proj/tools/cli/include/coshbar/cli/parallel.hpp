#pragma once

#include <cstddef>
#include <functional>

namespace coshbar::cli {

/// Worker count: COSHBAR_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
[[nodiscard]] unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
/// runs exactly once; callers store results by index so output order never
/// depends on scheduling. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coshbar::cli
