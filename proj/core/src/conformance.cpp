#include "protosel/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "protosel/errors.hpp"

namespace protosel {

Trace AlignmentResult::model_projection() const {
    Trace out;
    for (const auto& m : moves)
        if (m.kind == AlignmentMove::Kind::Sync || m.kind == AlignmentMove::Kind::ModelOnly) out.push_back(*m.label);
    return out;
}

Aligner::Aligner(const PetriNet& net, const ConformanceOptions& options)
    : net_(&net), options_(options), graph_(net, options.state_budget) {
    net.validate();
    for (const auto& t : net.transitions()) {
        if (t.silent()) {
            transition_codes_.push_back(-1);
            continue;
        }
        auto [it, inserted] = label_codes_.try_emplace(*t.label, static_cast<int>(label_codes_.size()));
        transition_codes_.push_back(it->second);
    }
}

std::size_t Aligner::shortest_model_run() {
    if (!shortest_) shortest_ = shortest_visible_path(graph_);
    return *shortest_;
}

double Aligner::fitness(const Trace& trace, const AlignmentResult& alignment) {
    const auto denominator = trace.size() + shortest_model_run();
    if (denominator == 0) return 1.0;
    return 1.0 - static_cast<double>(alignment.cost) / static_cast<double>(denominator);
}

AlignmentResult Aligner::align(const Trace& trace) {
    using Kind = AlignmentMove::Kind;
    using StateId = MarkingGraph::StateId;

    const auto n = trace.size();
    // -2: label the model never produces, so the event can only be a log move.
    std::vector<int> codes(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = label_codes_.find(trace[i]);
        codes[i] = it == label_codes_.end() ? -2 : it->second;
    }
    // Admissible and consistent: events with unknown labels each cost one deletion.
    std::vector<std::size_t> h(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) h[i] = h[i + 1] + (codes[i] == -2 ? 1 : 0);

    struct Node {
        StateId state;
        std::uint32_t pos;
        std::size_t g;
        std::int64_t parent;
        Kind kind;
        std::uint32_t transition;
    };
    struct Open {
        std::size_t f;
        std::uint32_t pos;
        std::size_t node;
        bool operator<(const Open& o) const {
            if (f != o.f) return f > o.f;        // smallest f first
            if (pos != o.pos) return pos < o.pos;  // then deepest in the trace
            return node > o.node;                // then oldest
        }
    };

    auto key = [n](StateId s, std::size_t pos) { return std::uint64_t{s} * (n + 1) + pos; };
    std::vector<Node> nodes;
    std::priority_queue<Open> open;
    std::unordered_map<std::uint64_t, std::size_t> best_g;
    std::unordered_set<std::uint64_t> closed;

    auto push = [&](StateId s, std::size_t pos, std::size_t g, std::int64_t parent, Kind kind, std::uint32_t t) {
        const auto k = key(s, pos);
        if (closed.contains(k)) return;
        auto [it, inserted] = best_g.try_emplace(k, g);
        if (!inserted) {
            if (it->second <= g) return;
            it->second = g;
        }
        nodes.push_back({s, static_cast<std::uint32_t>(pos), g, parent, kind, t});
        open.push({g + h[pos], static_cast<std::uint32_t>(pos), nodes.size() - 1});
    };

    push(graph_.initial(), 0, 0, -1, Kind::Silent, 0);
    while (!open.empty()) {
        const auto top = open.top();
        open.pop();
        const Node cur = nodes[top.node];
        const auto k = key(cur.state, cur.pos);
        if (closed.contains(k)) continue;
        closed.insert(k);
        if (closed.size() > options_.alignment_budget)
            throw BudgetExceeded("alignment search for " + to_string(trace) + " exceeded its budget",
                                 options_.alignment_budget);

        if (cur.pos == n && graph_.is_final(cur.state)) {
            AlignmentResult result;
            result.cost = cur.g;
            for (auto i = static_cast<std::int64_t>(top.node); nodes[i].parent >= 0; i = nodes[i].parent) {
                const auto& node = nodes[i];
                AlignmentMove move{node.kind, std::nullopt, std::nullopt};
                if (node.kind != Kind::LogOnly) {
                    move.transition = TransitionId{node.transition};
                    move.label = net_->transition(*move.transition).label;
                } else {
                    move.label = trace[node.pos - 1];
                }
                result.moves.push_back(std::move(move));
            }
            std::reverse(result.moves.begin(), result.moves.end());
            result.closest_model_trace_length = result.model_projection().size();
            return result;
        }

        const auto self = static_cast<std::int64_t>(top.node);
        if (cur.pos < n) push(cur.state, cur.pos + 1, cur.g + 1, self, Kind::LogOnly, 0);
        for (const auto& e : graph_.successors(cur.state)) {
            const int code = transition_codes_[e.transition.value];
            if (code < 0) {
                push(e.target, cur.pos, cur.g, self, Kind::Silent, e.transition.value);
                continue;
            }
            if (cur.pos < n && codes[cur.pos] == code)
                push(e.target, cur.pos + 1, cur.g, self, Kind::Sync, e.transition.value);
            push(e.target, cur.pos, cur.g + 1, self, Kind::ModelOnly, e.transition.value);
        }
    }
    throw Error("no complete alignment exists: the final marking is unreachable");
}

AlignmentResult alignment_cost(const Trace& trace, const PetriNet& net, std::size_t budget) {
    ConformanceOptions options;
    options.alignment_budget = budget;
    Aligner aligner(net, options);
    return aligner.align(trace);
}

double trace_fitness(const Trace& trace, const PetriNet& net, const ConformanceOptions& options) {
    Aligner aligner(net, options);
    return aligner.fitness(trace, aligner.align(trace));
}

LogAlignment align_log(const EventLog& log, Aligner& aligner) {
    LogAlignment out;
    out.total_traces = log.total_traces();
    out.shortest_model_run = aligner.shortest_model_run();
    for (auto& v : log.variants()) {
        auto alignment = aligner.align(v.trace);
        const double fit = aligner.fitness(v.trace, alignment);
        out.entries.push_back({std::move(v), std::move(alignment), fit});
    }
    return out;
}

LogAlignment align_log(const EventLog& log, const PetriNet& net, const ConformanceOptions& options) {
    Aligner aligner(net, options);
    return align_log(log, aligner);
}

double log_fitness(const LogAlignment& aligned) {
    if (aligned.total_traces == 0) throw InvalidArgument("fitness of an empty log is undefined");
    double sum = 0;
    for (const auto& e : aligned.entries) sum += static_cast<double>(e.variant.count) * e.fitness;
    return sum / static_cast<double>(aligned.total_traces);
}

double log_fitness(const EventLog& log, const PetriNet& net, const ConformanceOptions& options) {
    if (log.empty()) throw InvalidArgument("fitness of an empty log is undefined");
    return log_fitness(align_log(log, net, options));
}

double etc_precision(const LogAlignment& aligned, Aligner& aligner) {
    if (aligned.total_traces == 0) throw InvalidArgument("precision of an empty log is undefined");
    using Kind = AlignmentMove::Kind;

    struct PrefixState {
        std::size_t weight = 0;
        std::set<Activity> enabled;
        std::set<Activity> observed;
    };
    std::map<Trace, PrefixState> automaton;
    auto& graph = aligner.graph();
    const auto& net = aligner.net();

    auto record_enabled = [&](PrefixState& s, MarkingGraph::StateId m) {
        for (auto t : graph.visible_closure(m)) s.enabled.insert(*net.transition(t).label);
    };

    for (const auto& entry : aligned.entries) {
        MarkingGraph::StateId m = graph.initial();
        Trace prefix;
        record_enabled(automaton[prefix], m);
        for (const auto& move : entry.alignment.moves) {
            if (move.kind == Kind::LogOnly) continue;
            const auto& edges = graph.successors(m);
            auto edge = std::find_if(edges.begin(), edges.end(),
                                     [&](const auto& e) { return e.transition == *move.transition; });
            m = edge->target;
            if (move.kind == Kind::Silent) continue;
            auto& here = automaton[prefix];
            here.weight += entry.variant.count;
            here.observed.insert(*move.label);
            prefix.push_back(*move.label);
            record_enabled(automaton[prefix], m);
        }
    }

    double escaping = 0, allowed = 0;
    for (const auto& [prefix, s] : automaton) {
        if (s.weight == 0) continue;
        const auto w = static_cast<double>(s.weight);
        std::size_t esc = 0;
        for (const auto& a : s.enabled) esc += s.observed.contains(a) ? 0 : 1;
        escaping += w * static_cast<double>(esc);
        allowed += w * static_cast<double>(s.enabled.size());
    }
    return allowed == 0 ? 1.0 : 1.0 - escaping / allowed;
}

double etc_precision(const EventLog& log, const PetriNet& net, const ConformanceOptions& options) {
    if (log.empty()) throw InvalidArgument("precision of an empty log is undefined");
    Aligner aligner(net, options);
    const auto aligned = align_log(log, aligner);
    return etc_precision(aligned, aligner);
}

double f_beta(double precision, double fitness, double beta) {
    if (!(beta >= 0)) throw InvalidArgument("beta must be non-negative");
    if (!(precision >= 0 && precision <= 1)) throw InvalidArgument("precision must lie in [0, 1]");
    if (!(fitness >= 0 && fitness <= 1)) throw InvalidArgument("fitness must lie in [0, 1]");
    if (precision == 0 || fitness == 0) return 0.0;
    if (std::isinf(beta)) return fitness;
    const double b2 = beta * beta;
    return (1 + b2) * precision * fitness / (b2 * precision + fitness);
}

Sublog deviating_traces(const EventLog& log, const LogAlignment& aligned) {
    std::vector<Variant> deviating;
    for (const auto& e : aligned.entries)
        if (e.alignment.cost > 0) deviating.push_back(e.variant);
    return Sublog::with_counts(log, deviating);
}

Sublog deviating_traces(const EventLog& log, const PetriNet& net, const ConformanceOptions& options) {
    return deviating_traces(log, align_log(log, net, options));
}

Coverage coverage(const std::vector<Trace>& prototypes, const EventLog& log, const LogAlignment& aligned) {
    Coverage out;
    if (log.empty()) return out;
    const std::set<Trace> distinct(prototypes.begin(), prototypes.end());
    std::size_t covered = 0;
    for (const auto& p : distinct) {
        const auto n = log.count(p);
        if (n == 0) throw InvalidArgument("prototype " + to_string(p) + " is not a variant of the log");
        covered += n;
    }
    std::size_t replayable = 0;
    for (const auto& e : aligned.entries)
        if (e.alignment.cost == 0) replayable += e.variant.count;
    const auto total = static_cast<double>(log.total_traces());
    out.log_coverage = static_cast<double>(covered) / total;
    out.model_trace_coverage = static_cast<double>(replayable) / total;
    return out;
}

Coverage coverage(const std::vector<Trace>& prototypes, const EventLog& log, const PetriNet& net,
                  const ConformanceOptions& options) {
    return coverage(prototypes, log, align_log(log, net, options));
}

QualityReport evaluate(const EventLog& log, const LogAlignment& aligned, Aligner& aligner,
                       const std::vector<Trace>& prototypes, double beta) {
    QualityReport r;
    r.beta = beta;
    r.fitness = log_fitness(aligned);
    r.precision = etc_precision(aligned, aligner);
    r.f_beta = f_beta(r.precision, r.fitness, beta);
    r.size = size_metric(aligner.net());
    r.cardoso = cardoso_metric(aligner.net());
    const auto cov = coverage(prototypes, log, aligned);
    r.log_coverage = cov.log_coverage;
    r.model_trace_coverage = cov.model_trace_coverage;
    return r;
}

QualityReport evaluate(const EventLog& log, const PetriNet& net, const std::vector<Trace>& prototypes, double beta,
                       const ConformanceOptions& options) {
    if (!(beta >= 0)) throw InvalidArgument("beta must be non-negative");
    Aligner aligner(net, options);
    const auto aligned = align_log(log, aligner);
    return evaluate(log, aligned, aligner, prototypes, beta);
}

std::string to_json(const QualityReport& r, int indent) {
    nlohmann::ordered_json j;
    j["fitness"] = r.fitness;
    j["precision"] = r.precision;
    j["f_beta"] = r.f_beta;
    j["beta"] = r.beta;
    j["size"] = r.size;
    j["cardoso"] = r.cardoso;
    j["log_coverage"] = r.log_coverage;
    j["model_trace_coverage"] = r.model_trace_coverage;
    return j.dump(indent);
}

}  // namespace protosel
