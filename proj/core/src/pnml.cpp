#include "protosel/pnml.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "detail/xml.hpp"
#include "protosel/errors.hpp"

namespace protosel {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kInvisible = "$invisible$";

std::uint32_t parse_count(const std::string& text, const std::string& where) {
    std::uint32_t v = 0;
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw ParseError("invalid token count '" + text + "' in " + where);
    return v;
}

std::string attr(const pt::ptree& node, const char* name) {
    return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

struct Collected {
    std::vector<const pt::ptree*> places, transitions, arcs;
};

void collect(const pt::ptree& container, Collected& out) {
    for (const auto& [tag, child] : container) {
        if (tag == "place") out.places.push_back(&child);
        else if (tag == "transition") out.transitions.push_back(&child);
        else if (tag == "arc") out.arcs.push_back(&child);
        else if (tag == "page") collect(child, out);
    }
}

}  // namespace

void write_pnml(const PetriNet& net, std::ostream& out) {
    using detail::xml_escape;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<pnml>\n"
        << "  <net id=\"net1\" type=\"http://www.pnml.org/version-2009/grammar/pnmlcoremodel\">\n"
        << "    <page id=\"page1\">\n";
    for (std::uint32_t i = 0; i < net.places().size(); ++i) {
        const auto& p = net.places()[i];
        const auto id = xml_escape(p.id);
        out << "      <place id=\"" << id << "\">\n"
            << "        <name><text>" << id << "</text></name>\n";
        if (auto n = net.initial_marking()[PlaceId{i}])
            out << "        <initialMarking><text>" << n << "</text></initialMarking>\n";
        out << "      </place>\n";
    }
    for (const auto& t : net.transitions()) {
        out << "      <transition id=\"" << xml_escape(t.id) << "\">\n";
        if (t.label) {
            out << "        <name><text>" << xml_escape(*t.label) << "</text></name>\n";
        } else {
            out << "        <name><text>tau</text></name>\n"
                << "        <toolspecific tool=\"ProM\" version=\"6.4\" activity=\"" << kInvisible << "\"/>\n";
        }
        out << "      </transition>\n";
    }
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
        const auto& a = net.arcs()[i];
        const auto& place = xml_escape(net.place(a.place).id);
        const auto& trans = xml_escape(net.transition(a.transition).id);
        const bool to_t = a.direction == Arc::Direction::PlaceToTransition;
        out << "      <arc id=\"a" << i << "\" source=\"" << (to_t ? place : trans) << "\" target=\""
            << (to_t ? trans : place) << "\"/>\n";
    }
    out << "    </page>\n"
        << "    <finalmarkings>\n"
        << "      <marking>\n";
    for (std::uint32_t i = 0; i < net.places().size(); ++i) {
        if (auto n = net.final_marking()[PlaceId{i}])
            out << "        <place idref=\"" << xml_escape(net.places()[i].id) << "\"><text>" << n
                << "</text></place>\n";
    }
    out << "      </marking>\n"
        << "    </finalmarkings>\n"
        << "  </net>\n"
        << "</pnml>\n";
}

std::string export_pnml(const PetriNet& net) {
    std::ostringstream out;
    write_pnml(net, out);
    return out.str();
}

void write_pnml_file(const PetriNet& net, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_pnml(net, out);
}

PetriNet parse_pnml(std::istream& in) {
    pt::ptree doc;
    try {
        pt::read_xml(in, doc, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError("malformed PNML: " + e.message(), e.line());
    }
    const auto root = doc.get_child_optional("pnml");
    if (!root) throw ParseError("PNML document has no <pnml> root element");
    const auto net_node = root->get_child_optional("net");
    if (!net_node) throw ParseError("PNML document has no <net> element");

    Collected items;
    collect(*net_node, items);

    PetriNet net;
    std::map<std::string, PlaceId> places;
    std::map<std::string, TransitionId> transitions;
    for (const auto* node : items.places) {
        const auto id = attr(*node, "id");
        if (id.empty()) throw ParseError("place without id");
        if (places.contains(id)) throw ParseError("duplicate place id '" + id + "'");
        const auto p = net.add_place(id);
        places.emplace(id, p);
        if (auto m = node->get_optional<std::string>("initialMarking.text"))
            net.set_initial(p, parse_count(*m, "initial marking of " + id));
    }
    for (const auto* node : items.transitions) {
        const auto id = attr(*node, "id");
        if (id.empty()) throw ParseError("transition without id");
        if (transitions.contains(id) || places.contains(id)) throw ParseError("duplicate node id '" + id + "'");
        bool silent = false;
        for (const auto& [tag, child] : *node)
            if (tag == "toolspecific" && attr(child, "activity") == kInvisible) silent = true;
        const auto name = node->get<std::string>("name.text", "");
        if (name.empty()) silent = true;
        transitions.emplace(id, net.add_transition(silent ? std::nullopt : std::optional<Activity>(name), id));
    }
    for (const auto* node : items.arcs) {
        const auto src = attr(*node, "source");
        const auto dst = attr(*node, "target");
        if (auto w = node->get_optional<std::string>("inscription.text"); w && parse_count(*w, "arc inscription") != 1)
            throw ParseError("arc " + src + " -> " + dst + " has weight " + *w + "; only weight 1 is supported");
        if (auto p = places.find(src); p != places.end()) {
            auto t = transitions.find(dst);
            if (t == transitions.end()) throw ParseError("arc target '" + dst + "' is not a transition");
            net.add_arc(p->second, t->second);
        } else if (auto t = transitions.find(src); t != transitions.end()) {
            auto q = places.find(dst);
            if (q == places.end()) throw ParseError("arc target '" + dst + "' is not a place");
            net.add_arc(t->second, q->second);
        } else {
            throw ParseError("arc source '" + src + "' does not exist");
        }
    }
    if (auto finals = net_node->get_child_optional("finalmarkings")) {
        for (const auto& [tag, marking] : *finals) {
            if (tag != "marking") continue;
            for (const auto& [ptag, place] : marking) {
                if (ptag != "place") continue;
                const auto ref = attr(place, "idref");
                auto p = places.find(ref);
                if (p == places.end()) throw ParseError("final marking references unknown place '" + ref + "'");
                net.set_final(p->second, parse_count(place.get<std::string>("text", "1"), "final marking of " + ref));
            }
            break;  // first marking only
        }
    }
    return net;
}

PetriNet parse_pnml(std::string_view document) {
    std::istringstream in{std::string(document)};
    return parse_pnml(in);
}

PetriNet read_pnml_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return parse_pnml(in);
}

}  // namespace protosel
