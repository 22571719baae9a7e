#pragma once

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "protosel/eventlog.hpp"

namespace protosel::oracle {

/// Full-table LCS.
inline std::size_t lcs(const Trace& a, const Trace& b) {
    std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    return t[a.size()][b.size()];
}

/// Insert/delete edit distance by direct DP over edit operations.
inline std::size_t indel_distance(const Trace& a, const Trace& b) {
    const auto inf = std::numeric_limits<std::size_t>::max() / 2;
    std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1, inf));
    for (std::size_t i = 0; i <= a.size(); ++i) {
        for (std::size_t j = 0; j <= b.size(); ++j) {
            if (i == 0 || j == 0) {
                d[i][j] = i + j;
                continue;
            }
            d[i][j] = std::min(d[i - 1][j], d[i][j - 1]) + 1;
            if (a[i - 1] == b[j - 1]) d[i][j] = std::min(d[i][j], d[i - 1][j - 1]);
        }
    }
    return d[a.size()][b.size()];
}

/// Brute-force alignment cost against an enumerated (finite) language.
inline std::size_t best_word_cost(const Trace& trace, const std::set<Trace>& words) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& w : words) best = std::min(best, trace.size() + w.size() - 2 * lcs(trace, w));
    return best;
}

struct MedoidChoice {
    std::vector<std::size_t> medoids;  // ascending variant indices
    std::uint64_t cost = 0;
};

/// Exhaustive frequency-weighted k-medoids over every k-subset; ties keep
/// the lexicographically first subset.
inline MedoidChoice exhaustive_medoids(const std::vector<Variant>& variants, std::size_t k) {
    MedoidChoice best{{}, std::numeric_limits<std::uint64_t>::max()};
    std::vector<bool> pick(variants.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < pick.size(); ++i)
            if (pick[i]) chosen.push_back(i);
        std::uint64_t cost = 0;
        for (const auto& v : variants) {
            std::size_t nearest = std::numeric_limits<std::size_t>::max();
            for (auto m : chosen) nearest = std::min(nearest, indel_distance(v.trace, variants[m].trace));
            cost += v.count * nearest;
        }
        if (cost < best.cost) best = {chosen, cost};
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace protosel::oracle
