#include "lcp/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace lcp {

namespace {
std::atomic<int> g_threads{0};

int detect_threads() {
    if (const char* env = std::getenv("LCP_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}
}  // namespace

int num_threads() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n == 0) {
        n = detect_threads();
        g_threads.store(n, std::memory_order_relaxed);
    }
    return n;
}

void set_num_threads(int n) { g_threads.store(n > 0 ? n : 1, std::memory_order_relaxed); }

void parallel_for(int64_t count, const std::function<void(int, int64_t, int64_t)>& fn) {
    if (count <= 0) return;
    const int workers = std::min<int64_t>(num_threads(), count);
    if (workers <= 1) {
        fn(0, 0, count);
        return;
    }
    const int64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) {
        const int64_t lo = w * chunk;
        const int64_t hi = std::min<int64_t>(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] { fn(w, lo, hi); });
    }
    fn(0, 0, std::min<int64_t>(chunk, count));
    for (auto& t : pool) t.join();
}

void parallel_for_each(int64_t count, const std::function<void(int64_t)>& fn) {
    parallel_for(count, [&](int, int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) fn(i);
    });
}

}  // namespace lcp
