#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "protosel/eventlog.hpp"
#include "protosel/petrinet.hpp"

namespace protosel {

struct DirectlyFollowsGraph {
    std::set<Activity> nodes;
    std::map<std::pair<Activity, Activity>, std::size_t> edges;
    std::map<Activity, std::size_t> start_activities;
    std::map<Activity, std::size_t> end_activities;
};

/// Directly-follows counts, weighted by variant frequency.
DirectlyFollowsGraph dfg(const EventLog& log);

/// Block-structured process model.
struct ProcessTree {
    enum class Kind { Activity, Silent, Sequence, Choice, Parallel, Loop };

    Kind kind = Kind::Silent;
    Activity label;                     ///< Activity leaves only
    std::vector<ProcessTree> children;  ///< Loop: body first, then redo parts

    static ProcessTree activity(Activity a) { return {Kind::Activity, std::move(a), {}}; }
    static ProcessTree silent() { return {Kind::Silent, {}, {}}; }
    static ProcessTree op(Kind kind, std::vector<ProcessTree> children) { return {kind, {}, std::move(children)}; }

    /// Compact text form, e.g. `seq(a,and(b,c))`; silent leaves print as `tau`.
    std::string to_string() const;

    friend bool operator==(const ProcessTree&, const ProcessTree&) = default;
};

/// Recursive cut discovery over the directly-follows graph.
///
/// Empty traces are split off first as `xor(tau, ...)`; a log that is
/// exactly one activity once per trace becomes a leaf. Otherwise cuts are
/// tried in the order exclusive choice, sequence, parallel, loop, and the
/// first that applies splits the log. When none applies the sub-log becomes
/// a flower over its alphabet. Every input trace is accepted by the result.
/// Throws InvalidArgument on an empty log.
ProcessTree discover_tree(const EventLog& log);

/// Compositional translation with one source place (initially marked) and
/// one sink place (final marking).
PetriNet tree_to_net(const ProcessTree& tree);

/// discover_tree followed by tree_to_net.
PetriNet discover(const EventLog& log);

/// Pluggable discovery backend.
class Miner {
public:
    virtual ~Miner() = default;
    virtual std::string_view name() const = 0;
    virtual PetriNet discover(const EventLog& log) const = 0;
};

class InductiveMiner final : public Miner {
public:
    std::string_view name() const override { return "inductive"; }
    PetriNet discover(const EventLog& log) const override { return protosel::discover(log); }
};

/// Looks up a backend by id ("inductive"). Throws InvalidArgument otherwise.
std::unique_ptr<Miner> make_miner(std::string_view id);

}  // namespace protosel
