#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "protosel/eventlog.hpp"
#include "protosel/tracedist.hpp"

namespace protosel {

struct Cluster {
    std::size_t medoid = 0;             ///< index into the clustered variant list
    std::vector<std::size_t> members;   ///< ascending variant indices, medoid included
};

/// Partition of a variant list with one medoid per cluster.
struct Clustering {
    std::vector<Trace> variants;             ///< the clustered traces, input order
    std::vector<Cluster> clusters;
    std::vector<std::size_t> assignment;     ///< variant index -> cluster index
    std::uint64_t total_cost = 0;            ///< sum of count * distance to own medoid
    std::vector<std::uint64_t> cost_trace;   ///< total cost after every assign/update step
    std::size_t rounds = 0;                  ///< Lloyd rounds of the returned run

    const Trace& medoid(std::size_t cluster) const { return variants[clusters[cluster].medoid]; }
};

struct KMedoidsOptions {
    std::size_t max_rounds = 100;
    /// Extra runs from seeded random medoid sets; the cheapest run wins
    /// (ties keep the earlier run, so 0 restarts is the deterministic default).
    std::size_t restarts = 0;
};

/// Frequency-weighted K-Medoids over `variants` using precomputed distances.
///
/// Seeding is farthest-point from the most frequent variant. Each round
/// assigns every variant to its nearest medoid (ties: lowest cluster index)
/// and then moves each medoid to the member minimising
/// sum(count(v) * d(v, m)) (ties: lowest variant index). Stops when the
/// medoids no longer change or after `max_rounds`.
///
/// Throws InvalidArgument when k == 0, k > variants.size(), or `matrix` is
/// not indexed over the same traces.
Clustering kmedoids(std::span<const Variant> variants, std::size_t k, const DistanceMatrix& matrix,
                    std::uint64_t seed, const KMedoidsOptions& options = {});

/// The medoids in cluster order.
std::vector<Trace> prototypes(const Clustering& clustering);

}  // namespace protosel
