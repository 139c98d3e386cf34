#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fdcache {

// Chunked parallel loop over [0, n). Each index's work must depend only on
// the index (per-snapshot streams), and results go into per-index slots, so
// the outcome is byte-identical for any worker count.
template <typename F>
void parallel_for(long n, int workers, F&& body) {
    if (n <= 0) return;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (static_cast<long>(workers) > n) workers = static_cast<int>(n);
    if (workers == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    const long chunk = std::max<long>(1, n / (static_cast<long>(workers) * 16));
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long begin = next.fetch_add(chunk);
                if (begin >= n) break;
                const long end = std::min(n, begin + chunk);
                for (long i = begin; i < end; ++i) body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fdcache
