#include "rggfault/parallel.hpp"

#include <algorithm>

namespace rggfault {

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::uint64_t count_over_trials(std::uint64_t trials, unsigned workers,
                                const std::function<TrialFn()>& make_trial) {
    workers = resolve_workers(workers);
    if (workers == 1 || trials < 2) {
        TrialFn trial = make_trial();
        std::uint64_t count = 0;
        for (std::uint64_t t = 0; t < trials; ++t)
            if (trial(t)) ++count;
        return count;
    }

    constexpr std::uint64_t kBatch = 16;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> total{0};
    auto run = [&]() {
        TrialFn trial = make_trial();
        std::uint64_t local = 0;
        for (;;) {
            const std::uint64_t begin = next.fetch_add(kBatch, std::memory_order_relaxed);
            if (begin >= trials) break;
            const std::uint64_t end = std::min(begin + kBatch, trials);
            for (std::uint64_t t = begin; t < end; ++t)
                if (trial(t)) ++local;
        }
        total.fetch_add(local, std::memory_order_relaxed);
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    return total.load();
}

}  // namespace rggfault
