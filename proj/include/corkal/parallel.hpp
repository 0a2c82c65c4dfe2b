// Minimal chunked parallel-for over an index range.
#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace corkal {

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Calls fn(begin, end) on disjoint chunks covering [0, n).  fn must not
// touch shared mutable state; callers merge per-chunk results afterwards.
inline void parallel_chunks(size_t n, unsigned jobs,
                            const std::function<void(size_t, size_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    if (jobs <= 1 || n < 2 * jobs) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const size_t chunk = (n + jobs - 1) / jobs;
    for (size_t begin = 0; begin < n; begin += chunk) {
        const size_t end = std::min(n, begin + chunk);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace corkal
