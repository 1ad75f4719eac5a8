#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace topicsum {

// Uniform draw from [0, n) by rejection sampling on the raw 64-bit stream.
// std::uniform_int_distribution is implementation-defined, which would break
// cross-toolchain reproducibility of seeded runs.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace topicsum
