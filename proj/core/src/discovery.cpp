#include "protosel/discovery.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "protosel/errors.hpp"

namespace protosel {

DirectlyFollowsGraph dfg(const EventLog& log) {
    DirectlyFollowsGraph g;
    for (const auto& [trace, n] : log.counts()) {
        if (trace.empty()) continue;
        g.nodes.insert(trace.begin(), trace.end());
        g.start_activities[trace.front()] += n;
        g.end_activities[trace.back()] += n;
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) g.edges[{trace[i], trace[i + 1]}] += n;
    }
    return g;
}

std::string ProcessTree::to_string() const {
    switch (kind) {
        case Kind::Activity: return label;
        case Kind::Silent: return "tau";
        default: break;
    }
    std::string out = kind == Kind::Sequence ? "seq(" : kind == Kind::Choice ? "xor(" : kind == Kind::Parallel ? "and(" : "loop(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        out += children[i].to_string();
    }
    return out + ')';
}

namespace {

using Seq = std::vector<int>;
using Log = std::map<Seq, std::size_t>;
using Groups = std::vector<std::vector<int>>;  // activity codes per part

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Directly-follows structure of one sub-log over local indices 0..n-1.
struct LocalDfg {
    std::vector<int> acts;  // local index -> activity code, ascending
    std::map<int, std::size_t> local;
    std::vector<std::vector<bool>> edge;
    std::vector<bool> start, end;

    explicit LocalDfg(const Log& log) {
        std::set<int> alphabet;
        for (const auto& [t, n] : log) alphabet.insert(t.begin(), t.end());
        acts.assign(alphabet.begin(), alphabet.end());
        for (std::size_t i = 0; i < acts.size(); ++i) local[acts[i]] = i;
        const auto n = acts.size();
        edge.assign(n, std::vector<bool>(n, false));
        start.assign(n, false);
        end.assign(n, false);
        for (const auto& [t, c] : log) {
            if (t.empty()) continue;
            start[local[t.front()]] = true;
            end[local[t.back()]] = true;
            for (std::size_t i = 0; i + 1 < t.size(); ++i) edge[local[t[i]]][local[t[i + 1]]] = true;
        }
    }

    std::size_t size() const { return acts.size(); }

    // Groups of local indices (each ascending), ordered by smallest member.
    Groups to_codes(DisjointSets& sets, const std::vector<bool>* include = nullptr) const {
        std::map<std::size_t, std::vector<int>> by_root;
        for (std::size_t i = 0; i < size(); ++i)
            if (!include || (*include)[i]) by_root[sets.find(i)].push_back(static_cast<int>(i));
        Groups out;
        for (auto& [root, members] : by_root) out.push_back(std::move(members));
        std::sort(out.begin(), out.end());
        return out;
    }
};

Groups exclusive_cut(const LocalDfg& g) {
    DisjointSets sets(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.edge[i][j]) sets.unite(i, j);
    auto groups = g.to_codes(sets);
    return groups.size() >= 2 ? groups : Groups{};
}

Groups sequence_cut(const LocalDfg& g) {
    const auto n = g.size();
    auto reach = g.edge;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    // Mutually reachable or mutually unreachable activities share a part.
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (reach[i][j] == reach[j][i]) sets.unite(i, j);
    auto groups = g.to_codes(sets);
    if (groups.size() < 2) return {};

    // Valid only if, between any two parts, reachability runs one way for every pair.
    auto before = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (!reach[x][y] || reach[y][x]) return false;
        return true;
    };
    for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = a + 1; b < groups.size(); ++b)
            if (!before(groups[a], groups[b]) && !before(groups[b], groups[a])) return {};
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) { return before(a, b); });
    return groups;
}

Groups parallel_cut(const LocalDfg& g) {
    const auto n = g.size();
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(g.edge[i][j] && g.edge[j][i])) sets.unite(i, j);
    auto groups = g.to_codes(sets);
    if (groups.size() < 2) return {};

    // Every part needs a start and an end activity; deficient parts join the first sound one.
    auto sound = [&](const std::vector<int>& part) {
        bool s = false, e = false;
        for (int x : part) s |= g.start[x], e |= g.end[x];
        return s && e;
    };
    Groups kept, deficient;
    for (auto& part : groups) (sound(part) ? kept : deficient).push_back(std::move(part));
    if (kept.size() < 2) return {};
    for (auto& part : deficient) kept.front().insert(kept.front().end(), part.begin(), part.end());
    std::sort(kept.front().begin(), kept.front().end());
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Body part first, then redo parts.
Groups loop_cut(const LocalDfg& g) {
    const auto n = g.size();
    std::vector<bool> body(n, false);
    for (std::size_t i = 0; i < n; ++i) body[i] = g.start[i] || g.end[i];

    for (;;) {
        std::vector<bool> rest(n);
        for (std::size_t i = 0; i < n; ++i) rest[i] = !body[i];
        DisjointSets sets(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rest[i] && rest[j] && g.edge[i][j]) sets.unite(i, j);
        const auto redo = g.to_codes(sets, &rest);
        if (redo.empty()) return {};

        bool changed = false;
        for (const auto& part : redo) {
            bool ok = true;
            for (int y : part) {
                bool from_end = false, all_ends = true, to_start = false, all_starts = true;
                for (std::size_t x = 0; x < n; ++x) {
                    if (!body[x]) continue;
                    // Enter the redo part only from end activities, leave it only to start activities.
                    if (g.edge[x][y] && !g.end[x]) ok = false;
                    if (g.edge[y][x] && !g.start[x]) ok = false;
                    if (g.end[x]) {
                        from_end |= g.edge[x][y];
                        all_ends &= g.edge[x][y];
                    }
                    if (g.start[x]) {
                        to_start |= g.edge[y][x];
                        all_starts &= g.edge[y][x];
                    }
                }
                if ((from_end && !all_ends) || (to_start && !all_starts)) ok = false;
            }
            if (!ok) {
                for (int y : part) body[y] = true;
                changed = true;
            }
        }
        if (!changed) {
            Groups out;
            std::vector<int> body_part;
            for (std::size_t i = 0; i < n; ++i)
                if (body[i]) body_part.push_back(static_cast<int>(i));
            out.push_back(std::move(body_part));
            out.insert(out.end(), redo.begin(), redo.end());
            return out;
        }
    }
}

class Discoverer {
public:
    explicit Discoverer(std::vector<Activity> names) : names_(std::move(names)) {}

    ProcessTree mine(const Log& log) const {
        std::set<int> alphabet;
        bool has_empty = false;
        for (const auto& [t, n] : log) {
            alphabet.insert(t.begin(), t.end());
            has_empty |= t.empty();
        }
        if (alphabet.empty()) return ProcessTree::silent();
        if (has_empty) {
            Log rest = log;
            rest.erase(Seq{});
            return ProcessTree::op(ProcessTree::Kind::Choice, {ProcessTree::silent(), mine(rest)});
        }
        if (log.size() == 1 && log.begin()->first.size() == 1) return ProcessTree::activity(names_[*alphabet.begin()]);

        const LocalDfg g(log);
        std::vector<int> to_part(g.size());
        auto global_groups = [&](const Groups& local_groups) {
            Groups out;
            for (std::size_t p = 0; p < local_groups.size(); ++p) {
                std::vector<int> codes;
                for (int i : local_groups[p]) {
                    to_part[i] = static_cast<int>(p);
                    codes.push_back(g.acts[i]);
                }
                out.push_back(std::move(codes));
            }
            return out;
        };
        auto part_of = [&](int code) { return to_part[g.local.at(code)]; };

        if (auto cut = exclusive_cut(g); !cut.empty()) {
            global_groups(cut);
            std::vector<Log> parts(cut.size());
            for (const auto& [t, n] : log) parts[part_of(t.front())][t] += n;
            return recurse(ProcessTree::Kind::Choice, parts);
        }
        if (auto cut = sequence_cut(g); !cut.empty()) {
            global_groups(cut);
            return recurse(ProcessTree::Kind::Sequence, project(log, cut.size(), part_of));
        }
        if (auto cut = parallel_cut(g); !cut.empty()) {
            global_groups(cut);
            return recurse(ProcessTree::Kind::Parallel, project(log, cut.size(), part_of));
        }
        if (auto cut = loop_cut(g); !cut.empty()) {
            global_groups(cut);
            std::vector<Log> parts(cut.size());
            for (const auto& [t, n] : log) {
                // Maximal runs within one part; body runs go to part 0.
                std::size_t i = 0;
                while (i < t.size()) {
                    const int p = part_of(t[i]);
                    Seq run;
                    while (i < t.size() && part_of(t[i]) == p) run.push_back(t[i++]);
                    parts[p][run] += n;
                }
            }
            return recurse(ProcessTree::Kind::Loop, parts);
        }
        return flower(alphabet);
    }

private:
    template <class PartOf>
    static std::vector<Log> project(const Log& log, std::size_t parts, PartOf part_of) {
        std::vector<Log> out(parts);
        for (const auto& [t, n] : log) {
            std::vector<Seq> pieces(parts);
            for (int a : t) pieces[part_of(a)].push_back(a);
            for (std::size_t p = 0; p < parts; ++p) out[p][pieces[p]] += n;
        }
        return out;
    }

    ProcessTree recurse(ProcessTree::Kind kind, const std::vector<Log>& parts) const {
        std::vector<ProcessTree> children;
        children.reserve(parts.size());
        for (const auto& part : parts) children.push_back(mine(part));
        return ProcessTree::op(kind, std::move(children));
    }

    ProcessTree flower(const std::set<int>& alphabet) const {
        std::vector<ProcessTree> leaves;
        for (int a : alphabet) leaves.push_back(ProcessTree::activity(names_[a]));
        ProcessTree redo = leaves.size() == 1 ? std::move(leaves.front())
                                              : ProcessTree::op(ProcessTree::Kind::Choice, std::move(leaves));
        return ProcessTree::op(ProcessTree::Kind::Loop, {ProcessTree::silent(), std::move(redo)});
    }

    std::vector<Activity> names_;
};

class NetBuilder {
public:
    PetriNet build(const ProcessTree& tree) {
        const auto source = net_.add_place();
        const auto sink = net_.add_place();
        net_.set_initial(source);
        net_.set_final(sink);
        translate(tree, source, sink);
        return std::move(net_);
    }

private:
    TransitionId link(std::optional<Activity> label, PlaceId in, PlaceId out) {
        const auto t = net_.add_transition(std::move(label));
        net_.add_arc(in, t);
        net_.add_arc(t, out);
        return t;
    }

    void translate(const ProcessTree& node, PlaceId in, PlaceId out) {
        using Kind = ProcessTree::Kind;
        switch (node.kind) {
            case Kind::Activity:
                link(node.label, in, out);
                break;
            case Kind::Silent:
                link(std::nullopt, in, out);
                break;
            case Kind::Sequence: {
                PlaceId cur = in;
                for (std::size_t i = 0; i + 1 < node.children.size(); ++i) {
                    const auto next = net_.add_place();
                    translate(node.children[i], cur, next);
                    cur = next;
                }
                translate(node.children.back(), cur, out);
                break;
            }
            case Kind::Choice:
                for (const auto& child : node.children) translate(child, in, out);
                break;
            case Kind::Parallel: {
                const auto split = net_.add_transition(std::nullopt);
                const auto join = net_.add_transition(std::nullopt);
                net_.add_arc(in, split);
                net_.add_arc(join, out);
                for (const auto& child : node.children) {
                    const auto a = net_.add_place();
                    const auto b = net_.add_place();
                    net_.add_arc(split, a);
                    translate(child, a, b);
                    net_.add_arc(b, join);
                }
                break;
            }
            case Kind::Loop: {
                // Fresh places keep the loop from re-entering a place shared with siblings.
                const auto& body = node.children.front();
                const auto head = net_.add_place();
                link(std::nullopt, in, head);
                PlaceId tail = head;
                if (body.kind != Kind::Silent) {
                    tail = net_.add_place();
                    translate(body, head, tail);
                }
                for (std::size_t i = 1; i < node.children.size(); ++i) translate(node.children[i], tail, head);
                link(std::nullopt, tail, out);
                break;
            }
        }
    }

    PetriNet net_;
};

}  // namespace

ProcessTree discover_tree(const EventLog& log) {
    if (log.empty()) throw InvalidArgument("cannot discover a model from an empty log");
    const auto acts = log.activities();
    std::vector<Activity> names(acts.begin(), acts.end());
    std::map<Activity, int> code;
    for (std::size_t i = 0; i < names.size(); ++i) code[names[i]] = static_cast<int>(i);
    Log coded;
    for (const auto& [t, n] : log.counts()) {
        Seq s;
        s.reserve(t.size());
        for (const auto& a : t) s.push_back(code[a]);
        coded[s] += n;
    }
    return Discoverer(std::move(names)).mine(coded);
}

PetriNet tree_to_net(const ProcessTree& tree) { return NetBuilder{}.build(tree); }

PetriNet discover(const EventLog& log) { return tree_to_net(discover_tree(log)); }

std::unique_ptr<Miner> make_miner(std::string_view id) {
    if (id == "inductive") return std::make_unique<InductiveMiner>();
    throw InvalidArgument("unknown miner '" + std::string(id) + "' (available: inductive)");
}

}  // namespace protosel
