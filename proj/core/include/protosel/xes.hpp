#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "protosel/eventlog.hpp"

namespace protosel {

/// Reads the control-flow subset of an IEEE 1849 XES document: every
/// `<trace>` becomes one trace whose activities are the `concept:name`
/// values of its `<event>`s in document order. Other attributes are dropped.
///
/// Throws ParseError on malformed XML (with line) or on an event without a
/// `concept:name` (naming the 0-based trace index).
EventLog parse_xes(std::istream& in);
EventLog parse_xes(std::string_view document);
EventLog read_xes_file(const std::filesystem::path& path);

/// Writes one `<trace>` per occurrence (variant counts expanded), in
/// EventLog::variants() order. Output is deterministic.
void write_xes(const EventLog& log, std::ostream& out);
void write_xes_file(const EventLog& log, const std::filesystem::path& path);

}  // namespace protosel
