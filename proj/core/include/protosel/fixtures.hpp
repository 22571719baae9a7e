#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "protosel/petrinet.hpp"

namespace protosel::fixtures {

/// a, then (b xor c) concurrently with d, then e. Language:
/// {abde, adbe, acde, adce}.
PetriNet fig1();

/// f, then g and h concurrently, then i xor j.
PetriNet second_model();

/// Exclusive choice between the given nets: a silent transition from a new
/// source into each net's initial place(s) and from each final marking to a
/// new sink. Inputs must have 1-safe initial and final markings.
PetriNet choice(const std::vector<PetriNet>& nets);

/// Single run through the labels in order.
PetriNet sequence(const std::vector<Activity>& labels);

/// Any sequence over `alphabet`. With `silent_ends`, a silent transition
/// leads into and out of the looping place; otherwise one place is both
/// initial and final.
PetriNet flower(const std::vector<Activity>& alphabet, bool silent_ends = true);

/// choice(fig1, second_model)
PetriNet fig1_second();

/// Three disjoint behaviour groups: a-b-c, d-(e||f), g-h-(i xor j).
PetriNet three_group();

/// Looks a fixture up by name: fig1, second, fig1-second, three-group.
std::optional<PetriNet> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace protosel::fixtures
