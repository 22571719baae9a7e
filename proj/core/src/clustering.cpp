#include "protosel/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "detail/random.hpp"
#include "protosel/errors.hpp"

namespace protosel {

namespace {

struct Run {
    std::vector<std::size_t> medoids;
    std::vector<std::size_t> assignment;
    std::uint64_t cost = 0;
    std::vector<std::uint64_t> cost_trace;
    std::size_t rounds = 0;
};

class Lloyd {
public:
    Lloyd(std::span<const Variant> variants, const DistanceMatrix& d) : variants_(variants), d_(d) {}

    std::uint64_t assign(const std::vector<std::size_t>& medoids, std::vector<std::size_t>& assignment) const {
        assignment.assign(variants_.size(), 0);
        std::uint64_t cost = 0;
        for (std::size_t v = 0; v < variants_.size(); ++v) {
            std::size_t best = 0;
            for (std::size_t c = 1; c < medoids.size(); ++c)
                if (d_(v, medoids[c]) < d_(v, medoids[best])) best = c;
            assignment[v] = best;
            cost += variants_[v].count * std::uint64_t{d_(v, medoids[best])};
        }
        return cost;
    }

    static std::vector<std::vector<std::size_t>> members_of(const std::vector<std::size_t>& assignment,
                                                           std::size_t k) {
        std::vector<std::vector<std::size_t>> members(k);
        for (std::size_t v = 0; v < assignment.size(); ++v) members[assignment[v]].push_back(v);
        return members;
    }

    // Weighted cost of a cluster around candidate medoid `m`.
    std::uint64_t cluster_cost(const std::vector<std::size_t>& members, std::size_t m) const {
        std::uint64_t cost = 0;
        for (auto v : members) cost += variants_[v].count * std::uint64_t{d_(v, m)};
        return cost;
    }

    std::vector<std::size_t> update(const std::vector<std::vector<std::size_t>>& members) const {
        std::vector<std::size_t> next(members.size());
        for (std::size_t c = 0; c < members.size(); ++c) {
            auto best_cost = std::numeric_limits<std::uint64_t>::max();
            for (auto m : members[c]) {
                const auto cost = cluster_cost(members[c], m);
                if (cost < best_cost) {
                    best_cost = cost;
                    next[c] = m;
                }
            }
        }
        return next;
    }

    Run run(std::vector<std::size_t> medoids, std::size_t max_rounds) const {
        Run r;
        r.cost = assign(medoids, r.assignment);
        r.cost_trace.push_back(r.cost);
        while (r.rounds < max_rounds) {
            const auto members = members_of(r.assignment, medoids.size());
            auto next = update(members);
            if (next == medoids) break;
            medoids = std::move(next);
            ++r.rounds;
            // Cost with the old assignment and new medoids, then after reassignment.
            std::uint64_t updated = 0;
            for (std::size_t c = 0; c < medoids.size(); ++c) updated += cluster_cost(members[c], medoids[c]);
            r.cost_trace.push_back(updated);
            r.cost = assign(medoids, r.assignment);
            r.cost_trace.push_back(r.cost);
        }
        r.medoids = std::move(medoids);
        return r;
    }

    std::vector<std::size_t> farthest_point_seeds(std::size_t k) const {
        std::vector<std::size_t> seeds;
        std::size_t first = 0;
        for (std::size_t v = 1; v < variants_.size(); ++v)
            if (variants_[v].count > variants_[first].count) first = v;
        seeds.push_back(first);
        std::vector<DistanceMatrix::value_type> nearest(variants_.size());
        for (std::size_t v = 0; v < variants_.size(); ++v) nearest[v] = d_(v, first);
        while (seeds.size() < k) {
            std::size_t far = 0;
            bool found = false;
            for (std::size_t v = 0; v < variants_.size(); ++v) {
                if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) continue;
                if (!found || nearest[v] > nearest[far]) {
                    far = v;
                    found = true;
                }
            }
            seeds.push_back(far);
            for (std::size_t v = 0; v < variants_.size(); ++v) nearest[v] = std::min(nearest[v], d_(v, far));
        }
        return seeds;
    }

private:
    std::span<const Variant> variants_;
    const DistanceMatrix& d_;
};

}  // namespace

Clustering kmedoids(std::span<const Variant> variants, std::size_t k, const DistanceMatrix& matrix,
                    std::uint64_t seed, const KMedoidsOptions& options) {
    if (k == 0) throw InvalidArgument("k-medoids needs k >= 1");
    if (k > variants.size())
        throw InvalidArgument("k = " + std::to_string(k) + " exceeds the number of variants (" +
                              std::to_string(variants.size()) + ")");
    if (matrix.size() != variants.size())
        throw InvalidArgument("distance matrix size does not match the variant list");
    for (std::size_t i = 0; i < variants.size(); ++i)
        if (matrix.trace(i) != variants[i].trace)
            throw InvalidArgument("distance matrix is indexed over different variants");

    const Lloyd lloyd(variants, matrix);
    Run best = lloyd.run(lloyd.farthest_point_seeds(k), options.max_rounds);

    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        std::vector<std::size_t> pool(variants.size());
        std::iota(pool.begin(), pool.end(), 0);
        detail::partial_shuffle(pool, k, rng);
        pool.resize(k);
        Run candidate = lloyd.run(std::move(pool), options.max_rounds);
        if (candidate.cost < best.cost) best = std::move(candidate);
    }

    Clustering out;
    out.variants.reserve(variants.size());
    for (const auto& v : variants) out.variants.push_back(v.trace);
    out.clusters.resize(k);
    for (std::size_t c = 0; c < k; ++c) out.clusters[c].medoid = best.medoids[c];
    for (std::size_t v = 0; v < variants.size(); ++v) out.clusters[best.assignment[v]].members.push_back(v);
    out.assignment = std::move(best.assignment);
    out.total_cost = best.cost;
    out.cost_trace = std::move(best.cost_trace);
    out.rounds = best.rounds;
    return out;
}

std::vector<Trace> prototypes(const Clustering& clustering) {
    std::vector<Trace> out;
    out.reserve(clustering.clusters.size());
    for (std::size_t c = 0; c < clustering.clusters.size(); ++c) out.push_back(clustering.medoid(c));
    return out;
}

}  // namespace protosel
