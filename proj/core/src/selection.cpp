#include "protosel/selection.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "detail/random.hpp"
#include "protosel/errors.hpp"

namespace protosel {

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::NoImprovement: return "no_improvement";
        case StopReason::NoDeviatingTraces: return "no_deviating_traces";
        case StopReason::IterationCap: return "iteration_cap";
    }
    return "unknown";
}

namespace {

struct Scored {
    PetriNet model;
    QualityReport report;
    std::vector<Variant> deviating;
};

class Driver {
public:
    Driver(const EventLog& log, const SelectionOptions& options)
        : log_(log), options_(options), variants_(log.variants()), matrix_([&] {
              std::vector<Trace> traces;
              for (const auto& v : variants_) traces.push_back(v.trace);
              return DistanceMatrix(std::move(traces));
          }()) {
        if (!options.miner) {
            default_miner_ = std::make_unique<InductiveMiner>();
            miner_ = default_miner_.get();
        } else {
            miner_ = options.miner;
        }
        for (std::size_t i = 0; i < variants_.size(); ++i) index_[variants_[i].trace] = i;
    }

    std::vector<Trace> medoids_of(const std::vector<std::size_t>& indices, std::size_t k) const {
        std::vector<Variant> subset;
        for (auto i : indices) subset.push_back(variants_[i]);
        const auto sub = matrix_.restrict_to(indices);
        return prototypes(kmedoids(subset, k, sub, options_.seed, options_.clustering));
    }

    std::vector<Trace> initial_prototypes() const {
        std::vector<std::size_t> all(variants_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return medoids_of(all, options_.k);
    }

    Scored score(const std::vector<Trace>& prototypes, std::size_t iteration) const {
        try {
            Scored s;
            s.model = miner_->discover(Sublog::select(log_, prototypes).log());
            Aligner aligner(s.model, options_.conformance);
            const auto aligned = align_log(log_, aligner);
            s.report = evaluate(log_, aligned, aligner, prototypes, options_.beta);
            for (const auto& e : aligned.entries)
                if (e.alignment.cost > 0) s.deviating.push_back(e.variant);
            return s;
        } catch (const Error& e) {
            throw Error("iteration " + std::to_string(iteration) + ": " + e.what());
        }
    }

    std::vector<std::size_t> indices_of(const std::vector<Variant>& vs) const {
        std::vector<std::size_t> out;
        for (const auto& v : vs) out.push_back(index_.at(v.trace));
        return out;
    }

private:
    const EventLog& log_;
    const SelectionOptions& options_;
    std::vector<Variant> variants_;
    DistanceMatrix matrix_;
    std::map<Trace, std::size_t> index_;
    std::unique_ptr<Miner> default_miner_;
    const Miner* miner_ = nullptr;
};

}  // namespace

SelectionResult select_incremental(const EventLog& log, const SelectionOptions& options) {
    if (log.empty()) throw InvalidArgument("prototype selection needs a non-empty log");
    if (options.k == 0) throw InvalidArgument("k must be at least 1");
    if (options.k > log.variant_count())
        throw InvalidArgument("k = " + std::to_string(options.k) + " exceeds the number of variants (" +
                              std::to_string(log.variant_count()) + ")");
    if (!(options.beta >= 0)) throw InvalidArgument("beta must be non-negative");
    if (options.max_iterations == 0) throw InvalidArgument("max_iterations must be at least 1");

    const Driver driver(log, options);
    SelectionResult result;

    auto selected = driver.initial_prototypes();
    auto current = driver.score(selected, 1);
    result.history.push_back({1, selected, selected.size(), current.report});
    result.prototypes = selected;
    result.model = current.model;
    result.best_iteration = 0;

    for (std::size_t iteration = 2;; ++iteration) {
        if (current.deviating.empty()) {
            result.stop_reason = StopReason::NoDeviatingTraces;
            break;
        }
        if (iteration > options.max_iterations) {
            result.stop_reason = StopReason::IterationCap;
            break;
        }
        const auto indices = driver.indices_of(current.deviating);
        const auto medoids = driver.medoids_of(indices, std::min(options.k, indices.size()));
        std::vector<Trace> added;
        const std::set<Trace> known(selected.begin(), selected.end());
        for (const auto& m : medoids)
            if (!known.contains(m)) added.push_back(m);
        if (added.empty()) {
            result.stop_reason = StopReason::NoImprovement;
            break;
        }

        auto candidate = selected;
        candidate.insert(candidate.end(), added.begin(), added.end());
        auto scored = driver.score(candidate, iteration);
        result.history.push_back({iteration, added, candidate.size(), scored.report});
        if (!(scored.report.f_beta > current.report.f_beta)) {
            result.stop_reason = StopReason::NoImprovement;
            break;
        }
        selected = std::move(candidate);
        current = std::move(scored);
        result.prototypes = selected;
        result.model = current.model;
        result.best_iteration = result.history.size() - 1;
    }
    return result;
}

SelectionResult select_incremental(const EventLog& log, std::size_t k, double beta, std::size_t max_iterations) {
    SelectionOptions options;
    options.k = k;
    options.beta = beta;
    options.max_iterations = max_iterations;
    return select_incremental(log, options);
}

std::vector<Trace> baseline_frequency(const EventLog& log, std::size_t n) {
    if (n > log.variant_count())
        throw InvalidArgument("cannot select " + std::to_string(n) + " of " + std::to_string(log.variant_count()) +
                              " variants");
    std::vector<Trace> out;
    for (auto& v : log.variants()) {
        if (out.size() == n) break;
        out.push_back(std::move(v.trace));
    }
    return out;
}

std::vector<Trace> baseline_random(const EventLog& log, std::size_t n, std::uint64_t seed) {
    if (n > log.variant_count())
        throw InvalidArgument("cannot select " + std::to_string(n) + " of " + std::to_string(log.variant_count()) +
                              " variants");
    auto pool = log.variants();
    std::mt19937_64 rng(seed);
    detail::partial_shuffle(pool, n, rng);
    std::vector<Trace> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::move(pool[i].trace));
    return out;
}

std::string to_json(const std::vector<IterationRecord>& history, int indent) {
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : history) {
        nlohmann::ordered_json j;
        j["iteration"] = rec.iteration;
        j["prototypes_added"] = rec.prototypes_added;
        j["prototype_total"] = rec.prototype_total;
        j["report"] = nlohmann::ordered_json::parse(to_json(rec.report, -1));
        records.push_back(std::move(j));
    }
    return records.dump(indent);
}

}  // namespace protosel
