#include "protosel/fixtures.hpp"

#include "protosel/errors.hpp"

namespace protosel::fixtures {

PetriNet fig1() {
    PetriNet net;
    const auto start = net.add_place("start");
    const auto p1 = net.add_place("p1");
    const auto p2 = net.add_place("p2");
    const auto p3 = net.add_place("p3");
    const auto p4 = net.add_place("p4");
    const auto end = net.add_place("end");
    const auto a = net.add_transition("a", "t_a");
    const auto b = net.add_transition("b", "t_b");
    const auto c = net.add_transition("c", "t_c");
    const auto d = net.add_transition("d", "t_d");
    const auto e = net.add_transition("e", "t_e");
    net.add_arc(start, a);
    net.add_arc(a, p1);
    net.add_arc(a, p2);
    net.add_arc(p1, b);
    net.add_arc(p1, c);
    net.add_arc(b, p3);
    net.add_arc(c, p3);
    net.add_arc(p2, d);
    net.add_arc(d, p4);
    net.add_arc(p3, e);
    net.add_arc(p4, e);
    net.add_arc(e, end);
    net.set_initial(start);
    net.set_final(end);
    return net;
}

PetriNet second_model() {
    PetriNet net;
    const auto start = net.add_place("start");
    const auto q1 = net.add_place("q1");
    const auto q2 = net.add_place("q2");
    const auto q3 = net.add_place("q3");
    const auto q4 = net.add_place("q4");
    const auto q5 = net.add_place("q5");
    const auto end = net.add_place("end");
    const auto f = net.add_transition("f", "t_f");
    const auto g = net.add_transition("g", "t_g");
    const auto h = net.add_transition("h", "t_h");
    const auto join = net.add_transition(std::nullopt, "t_join");
    const auto i = net.add_transition("i", "t_i");
    const auto j = net.add_transition("j", "t_j");
    net.add_arc(start, f);
    net.add_arc(f, q1);
    net.add_arc(f, q2);
    net.add_arc(q1, g);
    net.add_arc(g, q3);
    net.add_arc(q2, h);
    net.add_arc(h, q4);
    net.add_arc(q3, join);
    net.add_arc(q4, join);
    net.add_arc(join, q5);
    net.add_arc(q5, i);
    net.add_arc(q5, j);
    net.add_arc(i, end);
    net.add_arc(j, end);
    net.set_initial(start);
    net.set_final(end);
    return net;
}

PetriNet choice(const std::vector<PetriNet>& nets) {
    PetriNet out;
    const auto source = out.add_place("source");
    const auto sink = out.add_place("sink");
    out.set_initial(source);
    out.set_final(sink);
    for (std::size_t n = 0; n < nets.size(); ++n) {
        const auto& net = nets[n];
        const std::string prefix = "n" + std::to_string(n) + "_";
        std::vector<PlaceId> places;
        for (const auto& p : net.places()) places.push_back(out.add_place(prefix + p.id));
        std::vector<TransitionId> transitions;
        for (const auto& t : net.transitions()) transitions.push_back(out.add_transition(t.label, prefix + t.id));
        for (const auto& a : net.arcs()) {
            if (a.direction == Arc::Direction::PlaceToTransition)
                out.add_arc(places[a.place.value], transitions[a.transition.value]);
            else
                out.add_arc(transitions[a.transition.value], places[a.place.value]);
        }
        const auto enter = out.add_transition(std::nullopt, prefix + "enter");
        const auto leave = out.add_transition(std::nullopt, prefix + "leave");
        out.add_arc(source, enter);
        out.add_arc(leave, sink);
        for (std::uint32_t p = 0; p < places.size(); ++p) {
            const auto init = net.initial_marking()[PlaceId{p}];
            const auto fin = net.final_marking()[PlaceId{p}];
            if (init > 1 || fin > 1) throw InvalidArgument("choice() needs 1-safe initial and final markings");
            if (init) out.add_arc(enter, places[p]);
            if (fin) out.add_arc(places[p], leave);
        }
    }
    return out;
}

PetriNet sequence(const std::vector<Activity>& labels) {
    PetriNet net;
    auto cur = net.add_place();
    net.set_initial(cur);
    for (const auto& l : labels) {
        const auto t = net.add_transition(l);
        const auto next = net.add_place();
        net.add_arc(cur, t);
        net.add_arc(t, next);
        cur = next;
    }
    net.set_final(cur);
    return net;
}

PetriNet flower(const std::vector<Activity>& alphabet, bool silent_ends) {
    PetriNet net;
    if (!silent_ends) {
        const auto hub = net.add_place("hub");
        for (const auto& a : alphabet) {
            const auto t = net.add_transition(a);
            net.add_arc(hub, t);
            net.add_arc(t, hub);
        }
        net.set_initial(hub);
        net.set_final(hub);
        return net;
    }
    const auto source = net.add_place("source");
    const auto hub = net.add_place("hub");
    const auto sink = net.add_place("sink");
    const auto enter = net.add_transition(std::nullopt, "enter");
    net.add_arc(source, enter);
    net.add_arc(enter, hub);
    for (const auto& a : alphabet) {
        const auto t = net.add_transition(a);
        net.add_arc(hub, t);
        net.add_arc(t, hub);
    }
    const auto leave = net.add_transition(std::nullopt, "leave");
    net.add_arc(hub, leave);
    net.add_arc(leave, sink);
    net.set_initial(source);
    net.set_final(sink);
    return net;
}

PetriNet fig1_second() { return choice({fig1(), second_model()}); }

PetriNet three_group() {
    // d then e||f
    PetriNet def;
    {
        const auto s = def.add_place("s");
        const auto x1 = def.add_place("x1");
        const auto x2 = def.add_place("x2");
        const auto y1 = def.add_place("y1");
        const auto y2 = def.add_place("y2");
        const auto e = def.add_place("e_end");
        const auto d = def.add_transition("d");
        const auto te = def.add_transition("e");
        const auto tf = def.add_transition("f");
        const auto join = def.add_transition(std::nullopt, "join");
        def.add_arc(s, d);
        def.add_arc(d, x1);
        def.add_arc(d, x2);
        def.add_arc(x1, te);
        def.add_arc(te, y1);
        def.add_arc(x2, tf);
        def.add_arc(tf, y2);
        def.add_arc(y1, join);
        def.add_arc(y2, join);
        def.add_arc(join, e);
        def.set_initial(s);
        def.set_final(e);
    }
    // g, h, then i xor j
    PetriNet ghij;
    {
        const auto s = ghij.add_place("s");
        const auto m1 = ghij.add_place("m1");
        const auto m2 = ghij.add_place("m2");
        const auto e = ghij.add_place("e_end");
        const auto g = ghij.add_transition("g");
        const auto h = ghij.add_transition("h");
        const auto i = ghij.add_transition("i");
        const auto j = ghij.add_transition("j");
        ghij.add_arc(s, g);
        ghij.add_arc(g, m1);
        ghij.add_arc(m1, h);
        ghij.add_arc(h, m2);
        ghij.add_arc(m2, i);
        ghij.add_arc(m2, j);
        ghij.add_arc(i, e);
        ghij.add_arc(j, e);
        ghij.set_initial(s);
        ghij.set_final(e);
    }
    return choice({sequence({"a", "b", "c"}), def, ghij});
}

std::optional<PetriNet> by_name(std::string_view name) {
    if (name == "fig1") return fig1();
    if (name == "second") return second_model();
    if (name == "fig1-second") return fig1_second();
    if (name == "three-group") return three_group();
    return std::nullopt;
}

std::vector<std::string> names() { return {"fig1", "second", "fig1-second", "three-group"}; }

}  // namespace protosel::fixtures
