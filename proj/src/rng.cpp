#include "graphsee/rng.hpp"

#include "graphsee/types.hpp"

#include <algorithm>
#include <numeric>

namespace graphsee {

std::vector<int> srs_sample(int population, int n, SplitMix64& rng) {
    if (n < 1 || n > population)
        throw DataError("sample size " + std::to_string(n) + " out of range for population " +
                        std::to_string(population));
    std::vector<int> pool(population);
    std::iota(pool.begin(), pool.end(), 0);
    // partial Fisher-Yates
    for (int k = 0; k < n; ++k) {
        const int j = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(population - k)));
        std::swap(pool[k], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace graphsee
