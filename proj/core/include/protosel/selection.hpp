#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "protosel/clustering.hpp"
#include "protosel/conformance.hpp"
#include "protosel/discovery.hpp"
#include "protosel/eventlog.hpp"
#include "protosel/petrinet.hpp"

namespace protosel {

struct IterationRecord {
    std::size_t iteration = 0;  ///< 1-based
    std::vector<Trace> prototypes_added;
    std::size_t prototype_total = 0;
    QualityReport report;
};

enum class StopReason { NoImprovement, NoDeviatingTraces, IterationCap };

std::string_view to_string(StopReason reason);

struct SelectionResult {
    PetriNet model;                   ///< discovered from `prototypes`
    std::vector<Trace> prototypes;    ///< log variants, selection order, no duplicates
    std::vector<IterationRecord> history;
    StopReason stop_reason = StopReason::NoImprovement;
    std::size_t best_iteration = 0;   ///< history index of the returned model
    const QualityReport& report() const { return history.at(best_iteration).report; }
};

struct SelectionOptions {
    std::size_t k = 1;
    double beta = 1.0;
    std::size_t max_iterations = 20;
    std::uint64_t seed = 0;
    const Miner* miner = nullptr;  ///< nullptr selects the inductive miner
    KMedoidsOptions clustering;
    ConformanceOptions conformance;
};

/// Incremental prototype selection.
///
/// Iteration 1 clusters every variant into k groups and discovers a model
/// from the medoids (each carrying its log count). Each later iteration
/// clusters the variants that do not fit the current model into
/// min(k, #deviating) groups, adds the new medoids, rediscovers and rescores
/// against the whole log. The loop ends when nothing deviates, when no new
/// medoid appears, when F-beta fails to increase strictly, or after
/// `max_iterations`; the best (last improving) model is returned.
///
/// Throws InvalidArgument for k == 0, k > #variants, negative beta or an
/// empty log. Errors from discovery or conformance are rethrown with the
/// iteration number prefixed.
SelectionResult select_incremental(const EventLog& log, const SelectionOptions& options);
SelectionResult select_incremental(const EventLog& log, std::size_t k, double beta, std::size_t max_iterations);

/// Top-n variants by count, ties lexicographic.
std::vector<Trace> baseline_frequency(const EventLog& log, std::size_t n);

/// n distinct variants drawn uniformly without replacement (seeded).
std::vector<Trace> baseline_random(const EventLog& log, std::size_t n, std::uint64_t seed);

/// JSON array of iteration records.
std::string to_json(const std::vector<IterationRecord>& history, int indent = 2);

}  // namespace protosel
