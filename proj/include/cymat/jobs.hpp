#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cymat {

/// Process-wide worker cap for the parallel kernels. 1 = serial.
void set_jobs(unsigned jobs);
unsigned jobs();

/// Splits [0, total) into at most jobs() contiguous chunks and runs
/// fn(begin, end, chunk_index) on each. Chunk boundaries depend only on
/// total and the worker count, and callers merge per-chunk results in
/// chunk order, so results are independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t total, Fn&& fn) {
    unsigned workers = jobs();
    if (workers <= 1 || total < 2048) {
        if (total) fn(std::size_t{0}, total, std::size_t{0});
        return;
    }
    std::size_t nchunks = std::min<std::size_t>(workers, total);
    std::size_t per = (total + nchunks - 1) / nchunks;
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t b = c * per;
        std::size_t e = std::min(total, b + per);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e, c] { fn(b, e, c); });
    }
    for (auto& t : pool) t.join();
}

} // namespace cymat
