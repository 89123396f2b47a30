#pragma once

#include <functional>

namespace eventstudy {

/// Worker cap: EVENTSTUDY_THREADS when set (minimum 1), otherwise the
/// hardware concurrency.
int max_threads();

/// Runs fn(0..n-1) across up to max_threads() workers. Each index is handled
/// exactly once; callers keep determinism by writing only to slot i. The
/// first exception thrown by any worker is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace eventstudy
