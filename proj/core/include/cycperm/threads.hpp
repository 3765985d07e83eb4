#pragma once

#include <cstddef>
#include <functional>

namespace cycperm {

/// Worker count: CYCPERM_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// default_thread_count()). Tasks are claimed dynamically; the first
/// exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace cycperm
