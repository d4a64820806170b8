#pragma once

#include <cstdint>
#include <functional>

namespace entropy_lab {

/// Worker cap: ENTROPY_LAB_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1). Affects speed only; every parallel
/// loop in this library writes to disjoint indices and reduces in a fixed
/// order, so results do not depend on this value.
int worker_count();

/// Runs body(begin, end) over a partition of [0, total) across up to
/// worker_count() threads. Blocks until all chunks complete.
void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace entropy_lab
