#include "protosel/xes.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "detail/xml.hpp"
#include "protosel/errors.hpp"

namespace protosel {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kConceptName = "concept:name";

const pt::ptree* find_concept_name(const pt::ptree& element) {
    for (const auto& [tag, child] : element) {
        if (tag != "string") continue;
        if (child.get<std::string>("<xmlattr>.key", "") == kConceptName) return &child;
    }
    return nullptr;
}

}  // namespace

EventLog parse_xes(std::istream& in) {
    pt::ptree doc;
    try {
        pt::read_xml(in, doc, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError("malformed XES: " + e.message(), e.line());
    }
    const auto root = doc.get_child_optional("log");
    if (!root) throw ParseError("XES document has no <log> root element");

    EventLog log;
    std::size_t trace_index = 0;
    for (const auto& [tag, trace] : *root) {
        if (tag != "trace") continue;
        Trace activities;
        std::size_t event_index = 0;
        for (const auto& [etag, event] : trace) {
            if (etag != "event") continue;
            const auto* name = find_concept_name(event);
            if (!name) {
                throw ParseError("trace " + std::to_string(trace_index) + ": event " +
                                 std::to_string(event_index) + " has no concept:name attribute");
            }
            activities.push_back(name->get<std::string>("<xmlattr>.value", ""));
            ++event_index;
        }
        log.add(std::move(activities));
        ++trace_index;
    }
    return log;
}

EventLog parse_xes(std::string_view document) {
    std::istringstream in{std::string(document)};
    return parse_xes(in);
}

EventLog read_xes_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return parse_xes(in);
}

void write_xes(const EventLog& log, std::ostream& out) {
    using detail::xml_escape;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<log xes.version=\"1849-2016\" xes.features=\"\" xmlns=\"http://www.xes-standard.org/\">\n"
        << "  <extension name=\"Concept\" prefix=\"concept\" uri=\"http://www.xes-standard.org/concept.xesext\"/>\n";
    std::size_t case_no = 0;
    for (const auto& v : log.variants()) {
        for (std::size_t n = 0; n < v.count; ++n) {
            out << "  <trace>\n"
                << "    <string key=\"concept:name\" value=\"case_" << case_no++ << "\"/>\n";
            for (const auto& a : v.trace)
                out << "    <event><string key=\"concept:name\" value=\"" << xml_escape(a) << "\"/></event>\n";
            out << "  </trace>\n";
        }
    }
    out << "</log>\n";
}

void write_xes_file(const EventLog& log, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_xes(log, out);
}

}  // namespace protosel
