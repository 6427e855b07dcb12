#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bclab {

// Deterministic parallel loop: index range is split into contiguous blocks,
// one per worker, and each iteration writes only to its own slot.  Results
// are therefore independent of the worker count; reductions are done by the
// caller after the join, in index order.
inline void parallel_for(std::int64_t n, int workers,
                         const std::function<void(std::int64_t)>& body) {
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int nw = static_cast<int>(std::min<std::int64_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int t = 0; t < nw; ++t) {
        const std::int64_t lo = n * t / nw;
        const std::int64_t hi = n * (t + 1) / nw;
        pool.emplace_back([&, lo, hi]() {
            try {
                for (std::int64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace bclab
