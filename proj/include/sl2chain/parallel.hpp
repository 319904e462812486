#pragma once

#include <cstddef>
#include <functional>

namespace sl2chain {

/// Calls body(i) for every i in [0, count) on up to `workers` threads
/// (0 = hardware concurrency). Work items are claimed from a shared counter;
/// the first exception stops the remaining items and is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace sl2chain
