#include "protosel/petrinet.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

#include "protosel/errors.hpp"

namespace protosel {

std::uint64_t Marking::total() const {
    return std::accumulate(tokens_.begin(), tokens_.end(), std::uint64_t{0});
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto t : m.tokens()) {
        h ^= t;
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

PlaceId PetriNet::add_place(std::string id) {
    const PlaceId p{static_cast<std::uint32_t>(places_.size())};
    if (id.empty()) id = "p" + std::to_string(p.value);
    places_.push_back({std::move(id)});
    place_out_.push_back(0);
    initial_.resize(places_.size());
    final_.resize(places_.size());
    return p;
}

TransitionId PetriNet::add_transition(std::optional<Activity> label, std::string id) {
    const TransitionId t{static_cast<std::uint32_t>(transitions_.size())};
    if (id.empty()) id = "t" + std::to_string(t.value);
    transitions_.push_back({std::move(id), std::move(label)});
    pre_.emplace_back();
    post_.emplace_back();
    return t;
}

void PetriNet::add_arc(PlaceId from, TransitionId to) {
    auto& pre = pre_.at(to.value);
    if (from.value >= places_.size()) throw InvalidArgument("arc from unknown place");
    if (std::find(pre.begin(), pre.end(), from) != pre.end())
        throw InvalidArgument("duplicate arc " + places_[from.value].id + " -> " + transitions_[to.value].id);
    pre.push_back(from);
    ++place_out_[from.value];
    arcs_.push_back({from, to, Arc::Direction::PlaceToTransition});
}

void PetriNet::add_arc(TransitionId from, PlaceId to) {
    auto& post = post_.at(from.value);
    if (to.value >= places_.size()) throw InvalidArgument("arc to unknown place");
    if (std::find(post.begin(), post.end(), to) != post.end())
        throw InvalidArgument("duplicate arc " + transitions_[from.value].id + " -> " + places_[to.value].id);
    post.push_back(to);
    arcs_.push_back({to, from, Arc::Direction::TransitionToPlace});
}

void PetriNet::set_initial(PlaceId p, std::uint32_t tokens) { initial_[p] = tokens; }
void PetriNet::set_final(PlaceId p, std::uint32_t tokens) { final_[p] = tokens; }

std::optional<PlaceId> PetriNet::find_place(std::string_view id) const {
    for (std::uint32_t i = 0; i < places_.size(); ++i)
        if (places_[i].id == id) return PlaceId{i};
    return std::nullopt;
}

std::optional<TransitionId> PetriNet::find_transition(std::string_view id) const {
    for (std::uint32_t i = 0; i < transitions_.size(); ++i)
        if (transitions_[i].id == id) return TransitionId{i};
    return std::nullopt;
}

std::set<Activity> PetriNet::visible_labels() const {
    std::set<Activity> out;
    for (const auto& t : transitions_)
        if (t.label) out.insert(*t.label);
    return out;
}

void PetriNet::validate() const {
    for (std::size_t t = 0; t < transitions_.size(); ++t) {
        if (pre_[t].empty()) throw InvalidArgument("transition " + transitions_[t].id + " has no input place");
        if (post_[t].empty()) throw InvalidArgument("transition " + transitions_[t].id + " has no output place");
    }
}

bool is_enabled(const PetriNet& net, const Marking& m, TransitionId t) {
    const auto pre = net.preset(t);
    return std::all_of(pre.begin(), pre.end(), [&](PlaceId p) { return m[p] > 0; });
}

std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m) {
    std::vector<TransitionId> out;
    for (std::uint32_t t = 0; t < net.transitions().size(); ++t)
        if (is_enabled(net, m, TransitionId{t})) out.push_back(TransitionId{t});
    return out;
}

Marking fire(const PetriNet& net, const Marking& m, TransitionId t) {
    if (!is_enabled(net, m, t)) throw InvalidArgument("transition " + net.transition(t).id + " is not enabled");
    Marking next = m;
    for (auto p : net.preset(t)) --next[p];
    for (auto p : net.postset(t)) ++next[p];
    return next;
}

MarkingGraph::MarkingGraph(const PetriNet& net, std::size_t max_states) : net_(&net), max_states_(max_states) {
    intern(net.initial_marking());
}

MarkingGraph::StateId MarkingGraph::intern(const Marking& m) {
    if (auto it = index_.find(m); it != index_.end()) return it->second;
    if (markings_.size() >= max_states_) throw BudgetExceeded("reachability graph exceeds its state budget", max_states_);
    const auto id = static_cast<StateId>(markings_.size());
    markings_.push_back(m);
    index_.emplace(m, id);
    edges_.emplace_back();
    closure_.emplace_back();
    return id;
}

const std::vector<MarkingGraph::Edge>& MarkingGraph::successors(StateId s) {
    if (!edges_[s]) {
        std::vector<Edge> out;
        const Marking m = markings_[s];
        for (auto t : enabled(*net_, m)) out.push_back({t, intern(fire(*net_, m, t))});
        edges_[s] = std::move(out);
    }
    return *edges_[s];
}

const std::vector<TransitionId>& MarkingGraph::visible_closure(StateId s) {
    if (!closure_[s]) {
        std::set<TransitionId> found;
        std::vector<StateId> stack{s};
        std::set<StateId> seen{s};
        while (!stack.empty()) {
            const auto cur = stack.back();
            stack.pop_back();
            for (const auto& e : successors(cur)) {
                if (!net_->transition(e.transition).silent()) {
                    found.insert(e.transition);
                } else if (seen.insert(e.target).second) {
                    stack.push_back(e.target);
                }
            }
        }
        closure_[s] = std::vector<TransitionId>(found.begin(), found.end());
    }
    return *closure_[s];
}

std::set<Trace> language_upto(const PetriNet& net, std::size_t max_len, std::size_t max_states) {
    MarkingGraph graph(net, max_states);
    std::set<Trace> words;
    std::set<std::pair<MarkingGraph::StateId, Trace>> seen;
    std::queue<std::pair<MarkingGraph::StateId, Trace>> frontier;
    frontier.push({graph.initial(), {}});
    seen.insert({graph.initial(), {}});
    while (!frontier.empty()) {
        auto [s, word] = std::move(frontier.front());
        frontier.pop();
        if (graph.is_final(s)) words.insert(word);
        for (const auto& e : graph.successors(s)) {
            const auto& t = net.transition(e.transition);
            Trace next = word;
            if (t.label) {
                if (word.size() >= max_len) continue;
                next.push_back(*t.label);
            }
            if (seen.insert({e.target, next}).second) frontier.push({e.target, std::move(next)});
        }
    }
    return words;
}

std::size_t shortest_visible_path(const PetriNet& net, std::size_t max_states) {
    MarkingGraph graph(net, max_states);
    return shortest_visible_path(graph);
}

std::size_t shortest_visible_path(MarkingGraph& graph) {
    const auto& net = graph.net();
    // 0-1 BFS: silent moves cost 0, visible moves cost 1.
    std::vector<std::size_t> dist{0};
    std::deque<MarkingGraph::StateId> queue{graph.initial()};
    std::vector<bool> done;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        if (done.size() <= s) done.resize(s + 1, false);
        if (done[s]) continue;
        done[s] = true;
        if (graph.is_final(s)) return dist[s];
        for (const auto& e : graph.successors(s)) {
            const std::size_t w = net.transition(e.transition).silent() ? 0 : 1;
            if (dist.size() <= e.target) dist.resize(graph.size(), SIZE_MAX);
            if (dist[s] + w < dist[e.target]) {
                dist[e.target] = dist[s] + w;
                if (w == 0) queue.push_front(e.target);
                else queue.push_back(e.target);
            }
        }
    }
    throw Error("final marking is unreachable from the initial marking");
}

std::size_t size_metric(const PetriNet& net) {
    return net.places().size() + net.transitions().size() + net.arcs().size();
}

std::size_t cardoso_metric(const PetriNet& net) {
    std::size_t splits = 0;
    for (std::uint32_t p = 0; p < net.places().size(); ++p) {
        const auto out = net.outdegree(PlaceId{p});
        if (out > 1) splits += out - 1;
    }
    for (std::uint32_t t = 0; t < net.transitions().size(); ++t) {
        const auto out = net.postset(TransitionId{t}).size();
        if (out > 1) splits += out - 1;
    }
    return splits;
}

}  // namespace protosel
