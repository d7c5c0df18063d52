#pragma once

#include <cstddef>
#include <functional>

namespace psg {

/// Runs body(0..count-1) on up to `threads` workers (0 = hardware
/// concurrency). Indices are handed out dynamically; the first exception
/// thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace psg
