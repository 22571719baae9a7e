#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "protosel/petrinet.hpp"

namespace protosel {

/// Serialises a net as PNML (place/transition core model).
///
/// Tag set written and understood:
///   pnml > net[id,type] > page[id] > place[id] > name > text
///                                             > initialMarking > text
///                                  > transition[id] > name > text
///                                                   > toolspecific[tool="ProM",activity="$invisible$"]  (silent only)
///                                  > arc[id,source,target]
///   pnml > net > finalmarkings > marking > place[idref] > text
///
/// Silent transitions are named "tau" and carry the `$invisible$` marker.
std::string export_pnml(const PetriNet& net);
void write_pnml(const PetriNet& net, std::ostream& out);
void write_pnml_file(const PetriNet& net, const std::filesystem::path& path);

/// Reads the tag set above. Places, transitions and arcs may sit directly in
/// `net` or in (nested) pages; document order is preserved. A transition is
/// silent when it carries the `$invisible$` marker or has no/empty name.
/// Arc inscriptions other than 1 are rejected.
PetriNet parse_pnml(std::istream& in);
PetriNet parse_pnml(std::string_view document);
PetriNet read_pnml_file(const std::filesystem::path& path);

}  // namespace protosel
