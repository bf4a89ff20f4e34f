#include "cellcrys/basics.hpp"

#include <algorithm>

namespace cellcrys {

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads <= 1 || n < 1024) {
        body(0, n);
        return;
    }
    unsigned t = std::min<unsigned>(threads, std::thread::hardware_concurrency());
    if (t <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
        std::size_t lo = k * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cellcrys
