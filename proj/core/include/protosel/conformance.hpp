#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "protosel/eventlog.hpp"
#include "protosel/petrinet.hpp"

namespace protosel {

struct AlignmentMove {
    enum class Kind : std::uint8_t {
        Sync,       ///< trace event matched by a visible transition, cost 0
        LogOnly,    ///< trace event skipped (deletion), cost 1
        ModelOnly,  ///< visible transition without event (insertion), cost 1
        Silent,     ///< silent transition, cost 0
    };
    Kind kind;
    std::optional<TransitionId> transition;  ///< empty for LogOnly
    std::optional<Activity> label;            ///< empty for Silent
};

struct AlignmentResult {
    std::size_t cost = 0;                        ///< insertions + deletions
    std::size_t closest_model_trace_length = 0;  ///< visible labels in the aligned model run
    std::vector<AlignmentMove> moves;

    Trace model_projection() const;
};

struct ConformanceOptions {
    std::size_t alignment_budget = 2'000'000;  ///< closed search nodes per alignment
    std::size_t state_budget = kDefaultStateBudget;  ///< distinct markings per net
};

/// Reusable optimal aligner for one net. The reachability graph is shared
/// by every alignment made through the same instance.
class Aligner {
public:
    explicit Aligner(const PetriNet& net, const ConformanceOptions& options = {});
    /// The aligner keeps a reference to the net, so temporaries are rejected.
    Aligner(PetriNet&&, const ConformanceOptions& = {}) = delete;

    /// Optimal alignment by A* over the synchronous product of trace and
    /// net. Throws BudgetExceeded when more than `alignment_budget` product
    /// states are expanded.
    AlignmentResult align(const Trace& trace);

    /// Fewest visible labels on a complete model run (cached).
    std::size_t shortest_model_run();

    /// 1 - cost / (|trace| + shortest_model_run()), 1 when the denominator is 0.
    double fitness(const Trace& trace, const AlignmentResult& alignment);

    MarkingGraph& graph() noexcept { return graph_; }
    const PetriNet& net() const noexcept { return *net_; }

private:
    const PetriNet* net_;
    ConformanceOptions options_;
    MarkingGraph graph_;
    std::map<Activity, int> label_codes_;
    std::vector<int> transition_codes_;  // -1 for silent transitions
    std::optional<std::size_t> shortest_;
};

AlignmentResult alignment_cost(const Trace& trace, const PetriNet& net,
                               std::size_t budget = ConformanceOptions{}.alignment_budget);

double trace_fitness(const Trace& trace, const PetriNet& net, const ConformanceOptions& options = {});

/// Every variant of a log aligned once against a net.
struct LogAlignment {
    struct Entry {
        Variant variant;
        AlignmentResult alignment;
        double fitness = 0;
    };
    std::vector<Entry> entries;  ///< EventLog::variants() order
    std::size_t total_traces = 0;
    std::size_t shortest_model_run = 0;
};

LogAlignment align_log(const EventLog& log, Aligner& aligner);
LogAlignment align_log(const EventLog& log, const PetriNet& net, const ConformanceOptions& options = {});

/// Frequency-weighted mean trace fitness. Throws InvalidArgument on an empty log.
double log_fitness(const EventLog& log, const PetriNet& net, const ConformanceOptions& options = {});
double log_fitness(const LogAlignment& aligned);

/// Escaping-edges precision over the prefix automaton of the aligned model
/// runs: 1 - sum w(s)*|escaping(s)| / sum w(s)*|enabled(s)|, where w(s)
/// counts log events leaving prefix state s, enabled(s) are the visible
/// activities the model allows there (through silent moves) and escaping(s)
/// the enabled ones never observed leaving s. Throws InvalidArgument on an
/// empty log.
double etc_precision(const EventLog& log, const PetriNet& net, const ConformanceOptions& options = {});
double etc_precision(const LogAlignment& aligned, Aligner& aligner);

/// (1 + b^2) * P * F / (b^2 * P + F); 0 when P or F is 0. An infinite beta
/// yields the limit F. Throws InvalidArgument on negative beta or inputs
/// outside [0, 1].
double f_beta(double precision, double fitness, double beta);

/// Variants with trace fitness below 1 (alignment cost > 0), original counts.
Sublog deviating_traces(const EventLog& log, const PetriNet& net, const ConformanceOptions& options = {});
Sublog deviating_traces(const EventLog& log, const LogAlignment& aligned);

struct Coverage {
    double log_coverage = 0;          ///< share of traces equal to a prototype
    double model_trace_coverage = 0;  ///< share of traces with alignment cost 0
};

/// Throws InvalidArgument when a prototype is not a variant of `log`.
Coverage coverage(const std::vector<Trace>& prototypes, const EventLog& log, const PetriNet& net,
                  const ConformanceOptions& options = {});
Coverage coverage(const std::vector<Trace>& prototypes, const EventLog& log, const LogAlignment& aligned);

struct QualityReport {
    double fitness = 0;
    double precision = 0;
    double f_beta = 0;
    double beta = 1;
    std::size_t size = 0;
    std::size_t cardoso = 0;
    double log_coverage = 0;
    double model_trace_coverage = 0;
};

/// Full report of `net` against `log`; `prototypes` feed log_coverage.
QualityReport evaluate(const EventLog& log, const PetriNet& net, const std::vector<Trace>& prototypes, double beta,
                       const ConformanceOptions& options = {});
/// Same, reusing an existing alignment of the whole log.
QualityReport evaluate(const EventLog& log, const LogAlignment& aligned, Aligner& aligner,
                       const std::vector<Trace>& prototypes, double beta);

/// JSON object with keys fitness, precision, f_beta, beta, size, cardoso,
/// log_coverage, model_trace_coverage.
std::string to_json(const QualityReport& report, int indent = 2);

}  // namespace protosel
