#include "qlc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qlc {

std::size_t worker_count() {
    static const std::size_t cached = [] {
        if (const char* env = std::getenv("QLC_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<std::size_t>(v);
            return std::size_t{1};
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<std::size_t>(hw) : std::size_t{1};
    }();
    return cached;
}

std::optional<std::size_t> find_first(std::size_t count,
                                      const std::function<bool(std::size_t)>& violation) {
    const std::size_t workers = worker_count();
    constexpr std::size_t kSerialCutoff = 512;
    constexpr std::size_t kBlock = 256;

    if (workers <= 1 || count <= kSerialCutoff) {
        for (std::size_t i = 0; i < count; ++i)
            if (violation(i)) return i;
        return std::nullopt;
    }

    std::atomic<std::size_t> next_block{0};
    std::atomic<std::size_t> best{count};
    const std::size_t nblocks = (count + kBlock - 1) / kBlock;

    auto worker = [&] {
        for (;;) {
            const std::size_t blk = next_block.fetch_add(1);
            if (blk >= nblocks) return;
            const std::size_t start = blk * kBlock;
            // A block wholly above the current best cannot improve it.
            if (start >= best.load()) continue;
            const std::size_t end = std::min(start + kBlock, count);
            for (std::size_t i = start; i < end; ++i) {
                if (i >= best.load()) break;
                if (violation(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };

    std::vector<std::thread> threads;
    const std::size_t nthreads = std::min(workers, nblocks);
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    const std::size_t found = best.load();
    if (found < count) return found;
    return std::nullopt;
}

}  // namespace qlc
