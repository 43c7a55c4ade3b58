#pragma once

#include <cstddef>
#include <functional>

namespace exem {

/// Thread cap from the EXEM_THREADS environment variable (0 or unset = auto).
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n) on up to thread_budget() threads. Work units
/// must write to disjoint outputs; the static index split keeps results
/// independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace exem
