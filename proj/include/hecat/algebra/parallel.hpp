#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hecat {

// Worker count from HECAT_THREADS, else the hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("HECAT_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

// Splits [0, n) into contiguous chunks, one per worker, and calls
// fn(worker, begin, end). Worker k always gets the k-th chunk, so callers
// that reduce per-worker partial results in worker order are deterministic.
template <class Fn>
void parallel_chunks(size_t n, int workers, Fn&& fn) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<size_t>(n, 1))));
    if (workers == 1) {
        fn(0, size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const size_t step = (n + workers - 1) / workers;
    for (int k = 0; k < workers; ++k) {
        size_t b = std::min(n, k * step), e = std::min(n, b + step);
        pool.emplace_back([&, k, b, e] {
            try {
                fn(k, b, e);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hecat
