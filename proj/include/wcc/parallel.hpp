#ifndef WCC_PARALLEL_HPP
#define WCC_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace wcc {

/// Worker count: WCC_THREADS env var if set, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* s = std::getenv("WCC_THREADS")) {
        long v = std::strtol(s, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Splits [begin, end) into contiguous chunks, maps each chunk with `work`
/// (chunk index, chunk begin, chunk end) and combines the per-chunk results
/// in chunk order, so the reduction is independent of scheduling.
template <typename R, typename Work, typename Combine>
R parallel_chunked(std::size_t begin, std::size_t end, R init, Work work, Combine combine) {
    std::size_t total = end - begin;
    unsigned nw = worker_count();
    if (nw <= 1 || total < 2 * nw) {
        return combine(std::move(init), work(0, begin, end));
    }
    std::size_t chunks = nw;
    std::vector<R> results(chunks, init);
    std::vector<std::thread> threads;
    std::size_t per = (total + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = begin + c * per;
        std::size_t hi = lo + per < end ? lo + per : end;
        if (lo >= hi) break;
        threads.emplace_back([&results, c, lo, hi, &work] { results[c] = work(c, lo, hi); });
    }
    for (auto& t : threads) t.join();
    R acc = std::move(init);
    for (auto& r : results) acc = combine(std::move(acc), std::move(r));
    return acc;
}

}  // namespace wcc

#endif
