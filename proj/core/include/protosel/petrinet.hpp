#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "protosel/eventlog.hpp"

namespace protosel {

struct PlaceId {
    std::uint32_t value = 0;
    friend auto operator<=>(PlaceId, PlaceId) = default;
};

struct TransitionId {
    std::uint32_t value = 0;
    friend auto operator<=>(TransitionId, TransitionId) = default;
};

/// Token multiset over the places of one net, stored densely by place index.
class Marking {
public:
    Marking() = default;
    explicit Marking(std::size_t places) : tokens_(places, 0) {}

    std::uint32_t operator[](PlaceId p) const { return tokens_.at(p.value); }
    std::uint32_t& operator[](PlaceId p) { return tokens_.at(p.value); }

    std::size_t places() const noexcept { return tokens_.size(); }
    std::uint64_t total() const;
    const std::vector<std::uint32_t>& tokens() const noexcept { return tokens_; }

    void resize(std::size_t places) { tokens_.resize(places, 0); }

    friend bool operator==(const Marking&, const Marking&) = default;
    friend auto operator<=>(const Marking&, const Marking&) = default;

private:
    std::vector<std::uint32_t> tokens_;
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const noexcept;
};

struct Place {
    std::string id;
    friend bool operator==(const Place&, const Place&) = default;
};

struct Transition {
    std::string id;
    std::optional<Activity> label;  ///< nullopt for a silent transition

    bool silent() const noexcept { return !label.has_value(); }
    friend bool operator==(const Transition&, const Transition&) = default;
};

struct Arc {
    enum class Direction : std::uint8_t { PlaceToTransition, TransitionToPlace };
    PlaceId place;
    TransitionId transition;
    Direction direction = Direction::PlaceToTransition;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Labelled place/transition net with explicit initial and final markings.
/// Arcs have weight one and form a set.
class PetriNet {
public:
    /// Adds a place. An empty id becomes "p<index>".
    PlaceId add_place(std::string id = {});
    /// Adds a transition; `label` nullopt makes it silent. An empty id becomes "t<index>".
    TransitionId add_transition(std::optional<Activity> label, std::string id = {});

    /// Arc insertion. Adding an arc twice is an InvalidArgument.
    void add_arc(PlaceId from, TransitionId to);
    void add_arc(TransitionId from, PlaceId to);

    void set_initial(PlaceId p, std::uint32_t tokens = 1);
    void set_final(PlaceId p, std::uint32_t tokens = 1);

    const Marking& initial_marking() const noexcept { return initial_; }
    const Marking& final_marking() const noexcept { return final_; }

    const std::vector<Place>& places() const noexcept { return places_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    const Place& place(PlaceId p) const { return places_.at(p.value); }
    const Transition& transition(TransitionId t) const { return transitions_.at(t.value); }

    std::span<const PlaceId> preset(TransitionId t) const { return pre_.at(t.value); }
    std::span<const PlaceId> postset(TransitionId t) const { return post_.at(t.value); }
    std::size_t outdegree(PlaceId p) const { return place_out_.at(p.value); }

    std::optional<PlaceId> find_place(std::string_view id) const;
    std::optional<TransitionId> find_transition(std::string_view id) const;

    /// Labels of visible transitions.
    std::set<Activity> visible_labels() const;

    Marking empty_marking() const { return Marking(places_.size()); }

    /// Throws InvalidArgument when a transition lacks an input or output arc.
    void validate() const;

    friend bool operator==(const PetriNet& a, const PetriNet& b) {
        return a.places_ == b.places_ && a.transitions_ == b.transitions_ && a.arcs_ == b.arcs_ &&
               a.initial_ == b.initial_ && a.final_ == b.final_;
    }

private:
    std::vector<Place> places_;
    std::vector<Transition> transitions_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<PlaceId>> pre_, post_;
    std::vector<std::size_t> place_out_;
    Marking initial_, final_;
};

/// Transitions enabled at `m`, ascending by id.
std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m);
bool is_enabled(const PetriNet& net, const Marking& m, TransitionId t);

/// Fires `t`; throws InvalidArgument if it is not enabled.
Marking fire(const PetriNet& net, const Marking& m, TransitionId t);

/// Lazily explored reachability graph. Markings are interned to dense ids;
/// interning more than `max_states` markings throws BudgetExceeded.
class MarkingGraph {
public:
    using StateId = std::uint32_t;

    struct Edge {
        TransitionId transition;
        StateId target;
    };

    MarkingGraph(const PetriNet& net, std::size_t max_states);
    MarkingGraph(PetriNet&&, std::size_t) = delete;

    StateId initial() const noexcept { return 0; }
    bool is_final(StateId s) const { return markings_[s] == net_->final_marking(); }
    const Marking& marking(StateId s) const { return markings_[s]; }
    std::size_t size() const noexcept { return markings_.size(); }
    const PetriNet& net() const noexcept { return *net_; }

    StateId intern(const Marking& m);

    /// Outgoing edges of `s`, computed on first use.
    const std::vector<Edge>& successors(StateId s);

    /// Visible transitions that can fire from `s` after zero or more silent moves.
    const std::vector<TransitionId>& visible_closure(StateId s);

private:
    const PetriNet* net_;
    std::size_t max_states_;
    std::deque<Marking> markings_;
    std::unordered_map<Marking, StateId, MarkingHash> index_;
    std::deque<std::optional<std::vector<Edge>>> edges_;
    std::deque<std::optional<std::vector<TransitionId>>> closure_;
};

constexpr std::size_t kDefaultStateBudget = 1'000'000;

/// Every visible word of at most `max_len` labels produced by a firing
/// sequence from the initial to the final marking (breadth-first).
std::set<Trace> language_upto(const PetriNet& net, std::size_t max_len, std::size_t max_states);

/// Fewest visible labels on any initial-to-final firing sequence. Throws
/// Error when the final marking is unreachable.
std::size_t shortest_visible_path(const PetriNet& net, std::size_t max_states = kDefaultStateBudget);
std::size_t shortest_visible_path(MarkingGraph& graph);

/// |places| + |transitions| + |arcs|.
std::size_t size_metric(const PetriNet& net);

/// Split count: fan-out beyond one at places (XOR) plus at transitions (AND).
std::size_t cardoso_metric(const PetriNet& net);

}  // namespace protosel
