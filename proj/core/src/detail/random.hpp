#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace protosel::detail {

// Unbiased draw from [0, n) straight off the engine, so sequences do not
// depend on the standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

inline double uniform_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Fisher-Yates over the first `k` slots only.
template <class T>
void partial_shuffle(std::vector<T>& items, std::size_t k, std::mt19937_64& rng) {
    for (std::size_t i = 0; i < k && i < items.size(); ++i) {
        const auto j = i + uniform_below(rng, items.size() - i);
        std::swap(items[i], items[j]);
    }
}

}  // namespace protosel::detail
