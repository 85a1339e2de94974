#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace skeletal {

namespace detail {
inline std::atomic<int> g_thread_count{0};  // 0 = not yet initialized
}

// Re-read SKELETAL_THREADS (>= 1; unset/invalid falls back to hardware
// concurrency, floored at 1). Called lazily on first use and explicitly by
// harnesses that change the variable mid-process.
inline int refresh_thread_count_from_env() {
    int n = 0;
    if (const char* env = std::getenv("SKELETAL_THREADS")) {
        n = std::atoi(env);
    }
    if (n < 1) {
        unsigned hw = std::thread::hardware_concurrency();
        n = hw >= 1 ? static_cast<int>(hw) : 1;
    }
    detail::g_thread_count.store(n, std::memory_order_relaxed);
    return n;
}

inline int thread_count() {
    int n = detail::g_thread_count.load(std::memory_order_relaxed);
    return n > 0 ? n : refresh_thread_count_from_env();
}

inline void set_thread_count(int n) {
    detail::g_thread_count.store(n >= 1 ? n : 1, std::memory_order_relaxed);
}

// Deterministic data-parallel loop: [0, n) is split into fixed contiguous
// chunks (one per worker, independent of scheduling), and `body(begin, end)`
// runs once per chunk. Results must be written to per-index slots (callers
// pre-size their outputs), so the outcome is bit-identical for every thread
// count; parallelism changes wall time only.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n > 0 ? n : 1);
    if (n == 0) return;
    if (workers <= 1) {
        body(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);  // lowest chunk wins: deterministic
}

}  // namespace skeletal
