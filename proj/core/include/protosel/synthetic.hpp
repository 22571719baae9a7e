#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "protosel/eventlog.hpp"
#include "protosel/petrinet.hpp"

namespace protosel {

struct SyntheticSpec {
    PetriNet model;
    std::size_t n_traces = 1000;
    double noise_rate = 0.0;    ///< probability that a trace receives edits
    std::uint64_t seed = 0;
    std::size_t min_edits = 1;
    std::size_t max_edits = 3;
    std::size_t max_steps = 10'000;  ///< firings per simulated run before restarting it
};

/// One random complete run of `net`: at each marking a uniformly random
/// choice among enabled transitions (plus stopping, when the marking is
/// final). Runs that dead-lock or exceed `max_steps` are restarted; throws
/// Error after 1000 failed attempts.
Trace simulate(const PetriNet& net, std::mt19937_64& rng, std::size_t max_steps = 10'000);

/// Simulates `n_traces` runs of the model; each trace is, with probability
/// `noise_rate`, hit by between min_edits and max_edits random single-event
/// insertions (activity drawn from the model's alphabet) or deletions.
/// Deterministic for a given seed. Throws InvalidArgument for a noise rate
/// outside [0, 1].
EventLog gen_synthetic(const SyntheticSpec& spec);

}  // namespace protosel
