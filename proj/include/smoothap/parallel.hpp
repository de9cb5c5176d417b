#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace smoothap {

// Runs fn(i) for i in [0, count) on up to `threads` workers with a static
// interleaved schedule. fn must only write to slots owned by index i.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
}

}  // namespace smoothap
