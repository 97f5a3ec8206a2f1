// Deterministic parallel partitioning. Work is cut into fixed chunks whose
// boundaries depend only on the problem size, never on the thread count, and
// per-chunk results are merged by chunk index. Output is therefore identical
// for any number of workers.
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lgh {

// Worker count: `requested` if positive, else HYPEROVAL_THREADS if set and
// positive, else std::thread::hardware_concurrency().
int resolve_threads(int requested = 0);

// Applies fn(chunk_index, begin, end) to nchunks half-open slices of [0, n)
// and returns the per-chunk results in chunk order.
template <typename R, typename Fn>
std::vector<R> chunked_map(int64_t n, int nchunks, int threads, Fn&& fn) {
    if (nchunks < 1) nchunks = 1;
    if (n < nchunks) nchunks = n > 0 ? (int)n : 1;
    std::vector<R> results(nchunks);
    auto bound = [&](int c) { return n * c / nchunks; };
    if (threads <= 1) {
        for (int c = 0; c < nchunks; ++c) results[c] = fn(c, bound(c), bound(c + 1));
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            for (int c; (c = next.fetch_add(1)) < nchunks;)
                results[c] = fn(c, bound(c), bound(c + 1));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    int nworkers = threads < nchunks ? threads : nchunks;
    pool.reserve(nworkers);
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace lgh
