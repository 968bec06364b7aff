#ifndef BSV_PARALLEL_HPP
#define BSV_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace bsv {

// Runs fn(i) for i in [0, count) on `jobs` threads.  fn must only touch its
// own slot; results land in caller-owned storage, so the outcome does not
// depend on scheduling.
template <class Fn>
void parallel_for(std::int64_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; i++) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        while (true) {
            std::int64_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

int default_jobs();  // RF_THREADS env var, else hardware concurrency

}  // namespace bsv

#endif
