#pragma once

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace hybridnet {

/// Worker count: HYBRIDNET_THREADS if set (even above the core count, so
/// scheduling-independence is testable anywhere), else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("HYBRIDNET_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Run f(i) for i in [0, n) on static contiguous blocks. f must only write
/// to per-index slots; the caller reduces in index order afterwards, so the
/// result is independent of the worker count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace hybridnet
