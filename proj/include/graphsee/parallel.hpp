#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace graphsee {

/// Splits [0, total) into one contiguous chunk per thread and runs
/// fn(begin, end, chunk_index) concurrently. Chunk results must be merged by
/// the caller in chunk order for deterministic reductions.
inline void parallel_chunks(long total, int threads,
                            const std::function<void(long, long, int)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || total < 2L * threads) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    const long per = (total + threads - 1) / threads;
    int chunk = 0;
    for (long begin = 0; begin < total; begin += per, ++chunk)
        pool.emplace_back(fn, begin, std::min(begin + per, total), chunk);
    for (auto& t : pool) t.join();
}

}  // namespace graphsee
