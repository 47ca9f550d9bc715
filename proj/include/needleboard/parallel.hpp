#pragma once

#include <cstddef>
#include <functional>

namespace needleboard {

// Worker count used by library scans. Defaults to NEEDLEBOARD_THREADS or 1.
unsigned thread_count() noexcept;
void set_thread_count(unsigned threads) noexcept;

/// Runs body(k) for k in [0, count) over contiguous blocks. Callers write
/// results into slot k and reduce afterwards in index order, so output never
/// depends on the worker count. Nested calls run inline.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace needleboard
