#include "kpzld/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kpzld::threads {

namespace {
int g_workers = 0;  // 0 = not resolved yet

int resolve() {
    if (g_workers > 0) return g_workers;
    if (const char* env = std::getenv("KPZ_LDP_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return g_workers = n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return g_workers = (hc > 0 ? static_cast<int>(hc) : 1);
}
}  // namespace

void set_worker_count(int n) { g_workers = std::max(1, n); }

int worker_count() { return resolve(); }

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    const int nw = std::min<std::size_t>(static_cast<std::size_t>(worker_count()),
                                         n == 0 ? 1 : n);
    if (nw <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nw);
    const std::size_t chunk = (n + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const std::size_t b = std::min(n, static_cast<std::size_t>(w) * chunk);
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_chunks(n, [&fn](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

}  // namespace kpzld::threads
