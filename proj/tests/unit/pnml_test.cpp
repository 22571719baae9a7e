#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "generators.hpp"
#include "protosel/errors.hpp"
#include "protosel/discovery.hpp"
#include "protosel/fixtures.hpp"
#include "protosel/pnml.hpp"

using namespace protosel;

TEST(Pnml, FixturesRoundTrip) {
    for (const auto& name : fixtures::names()) {
        const auto net = *fixtures::by_name(name);
        EXPECT_EQ(parse_pnml(export_pnml(net)), net) << name;
    }
}

TEST(Pnml, DiscoveredAndRandomNetsRoundTrip) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const auto net = i % 2 ? gen::random_dag_net(rng, 4) : tree_to_net(gen::random_small_tree(rng, 4, 10));
        EXPECT_EQ(parse_pnml(export_pnml(net)), net);
    }
}

TEST(Pnml, SilentTransitionMarkedInvisible) {
    const auto doc = export_pnml(fixtures::flower({"a"}));
    EXPECT_NE(doc.find("$invisible$"), std::string::npos);
    EXPECT_NE(doc.find("<text>tau</text>"), std::string::npos);
}

TEST(Pnml, EmptyNetIsMinimalDocument) {
    const auto doc = export_pnml(PetriNet{});
    EXPECT_NE(doc.find("<pnml>"), std::string::npos);
    EXPECT_EQ(parse_pnml(doc), PetriNet{});
}

TEST(Pnml, ExportIsDeterministic) {
    EXPECT_EQ(export_pnml(fixtures::three_group()), export_pnml(fixtures::three_group()));
}

TEST(Pnml, UnnamedTransitionIsSilent) {
    const auto net = parse_pnml(
        "<pnml><net id=\"n\"><page id=\"pg\">"
        "<place id=\"s\"><initialMarking><text>1</text></initialMarking></place>"
        "<place id=\"e\"/>"
        "<transition id=\"t\"/>"
        "<arc id=\"a1\" source=\"s\" target=\"t\"/><arc id=\"a2\" source=\"t\" target=\"e\"/>"
        "</page><finalmarkings><marking><place idref=\"e\"><text>1</text></place></marking></finalmarkings>"
        "</net></pnml>");
    ASSERT_EQ(net.transitions().size(), 1u);
    EXPECT_TRUE(net.transitions()[0].silent());
    EXPECT_EQ(net.initial_marking()[PlaceId{0}], 1u);
    EXPECT_EQ(net.final_marking()[PlaceId{1}], 1u);
}

TEST(Pnml, RejectsBrokenDocuments) {
    EXPECT_THROW(parse_pnml("<pnml><net>"), ParseError);
    EXPECT_THROW(parse_pnml("<pnml><net id=\"n\"><place id=\"p\"/>"
                            "<arc id=\"a\" source=\"p\" target=\"missing\"/></net></pnml>"),
                 ParseError);
    EXPECT_THROW(parse_pnml("<pnml><net id=\"n\"><place id=\"p\"/><transition id=\"t\"/>"
                            "<arc id=\"a\" source=\"p\" target=\"t\"><inscription><text>2</text></inscription></arc>"
                            "</net></pnml>"),
                 ParseError);
}

TEST(Pnml, ShippedFixtureMatchesBuiltIn) {
    const std::filesystem::path dir = PROTOSEL_FIXTURE_DIR;
    EXPECT_EQ(read_pnml_file(dir / "fig1.pnml"), fixtures::fig1());
    EXPECT_EQ(read_pnml_file(dir / "fig1-second.pnml"), fixtures::fig1_second());
}

TEST(Pnml, MissingFileThrows) {
    EXPECT_THROW(read_pnml_file("/nonexistent/model.pnml"), Error);
}
