#pragma once

#include <cstdint>
#include <functional>

namespace dcq {

/// Effective worker count: `requested` if nonzero, else hardware
/// concurrency, both capped by the DCQ_THREADS environment variable.
unsigned worker_count(unsigned requested = 0);

/// Runs body(i) for i in [begin, end) on `threads` workers (static
/// striding). Bodies must write to disjoint slots; there is no reduction
/// here, so results are identical for any worker count.
void parallel_for(std::int64_t begin, std::int64_t end, unsigned threads,
                  const std::function<void(std::int64_t)>& body);

} // namespace dcq
