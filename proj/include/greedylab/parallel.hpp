// Deterministic block-parallel execution: work splits into fixed blocks
// whose results are merged in block order, so the outcome is identical
// for any worker count.
#ifndef GREEDYLAB_PARALLEL_HPP
#define GREEDYLAB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace greedylab {

inline std::size_t worker_count() {
    if (const char* env = std::getenv("GREEDYLAB_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

// fn(block_index) -> R, run for blocks 0..n_blocks-1. Results land in a
// vector indexed by block, independent of scheduling. The first exception
// (in block order) is rethrown after all workers finish.
template <typename R, typename Fn>
std::vector<R> run_blocks(std::size_t n_blocks, Fn fn, std::size_t workers = worker_count()) {
    std::vector<R> results(n_blocks);
    if (n_blocks == 0) return results;
    workers = std::min(workers, n_blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) results[b] = fn(b);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_error{n_blocks};
    std::vector<std::exception_ptr> errors(n_blocks);
    auto drain = [&] {
        while (true) {
            std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) break;
            if (first_error.load() < b) continue;  // outcome settled; skip the tail
            try {
                results[b] = fn(b);
            } catch (...) {
                errors[b] = std::current_exception();
                std::size_t seen = first_error.load();
                while (b < seen && !first_error.compare_exchange_weak(seen, b)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    std::size_t err = first_error.load();
    if (err < n_blocks) std::rethrow_exception(errors[err]);
    return results;
}

}  // namespace greedylab

#endif
