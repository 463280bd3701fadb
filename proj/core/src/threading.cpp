#include "frameshift/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frameshift::threading {

namespace {
std::atomic<int> g_threads{0};

int resolve() {
    const int v = g_threads.load();
    if (v > 0) return v;
    if (const char* env = std::getenv("FRAMESHIFT_THREADS")) {
        const int e = std::atoi(env);
        if (e > 0) return e;
    }
    return 1;
}
}  // namespace

void set_threads(int n) { g_threads.store(n); }
int threads() { return resolve(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int nt = resolve();
    if (nt <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(nt, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = count * w / workers;
            const std::size_t hi = count * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace frameshift::threading
