#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "protosel/conformance.hpp"
#include "protosel/discovery.hpp"
#include "protosel/errors.hpp"

using namespace protosel;

namespace {

using K = ProcessTree::Kind;

ProcessTree leaf(const char* a) { return ProcessTree::activity(a); }

void expect_replays(const EventLog& log, const PetriNet& net) {
    Aligner aligner(net);
    for (const auto& v : log.variants()) EXPECT_EQ(aligner.align(v.trace).cost, 0u) << to_string(v.trace);
}

}  // namespace

TEST(Dfg, Counts) {
    const auto g = dfg(EventLog({{{"a", "b"}, 2}}));
    EXPECT_EQ(g.edges, (std::map<std::pair<Activity, Activity>, std::size_t>{{{"a", "b"}, 2}}));
    EXPECT_EQ(g.start_activities, (std::map<Activity, std::size_t>{{"a", 2}}));
    EXPECT_EQ(g.end_activities, (std::map<Activity, std::size_t>{{"b", 2}}));

    const auto single = dfg(EventLog({{{"a"}, 1}}));
    EXPECT_TRUE(single.edges.empty());
    EXPECT_EQ(single.start_activities.at("a"), 1u);
    EXPECT_EQ(single.end_activities.at("a"), 1u);

    EXPECT_EQ(dfg(EventLog({{{"a", "a"}, 1}})).edges.at({"a", "a"}), 1u);
}

TEST(Discovery, SequenceWithParallelTail) {
    const EventLog log({{{"a", "b", "c"}, 1}, {{"a", "c", "b"}, 1}});
    const auto tree = discover_tree(log);
    EXPECT_EQ(tree.to_string(), "seq(a,and(b,c))");
    EXPECT_EQ(language_upto(discover(log), 3, 1000), (std::set<Trace>{{"a", "b", "c"}, {"a", "c", "b"}}));
}

TEST(Discovery, SingleActivityLeaf) {
    const auto net = discover(EventLog({{{"a"}, 5}}));
    EXPECT_EQ(discover_tree(EventLog({{{"a"}, 5}})).to_string(), "a");
    EXPECT_EQ(net.places().size(), 2u);
    ASSERT_EQ(net.transitions().size(), 1u);
    EXPECT_EQ(net.transitions()[0].label, "a");
    EXPECT_EQ(language_upto(net, 3, 100), (std::set<Trace>{{"a"}}));
}

TEST(Discovery, ExclusiveChoice) {
    EXPECT_EQ(discover_tree(EventLog({{{"a", "b"}, 1}, {{"c"}, 1}})).to_string(), "xor(seq(a,b),c)");
}

TEST(Discovery, EmptyTraceBecomesSkip) {
    const EventLog log({{{}, 1}, {{"a"}, 1}});
    EXPECT_EQ(discover_tree(log).to_string(), "xor(tau,a)");
    expect_replays(log, discover(log));
}

TEST(Discovery, LoopDetected) {
    const EventLog log({{{"a"}, 1}, {{"a", "b", "a"}, 1}});
    EXPECT_EQ(discover_tree(log).to_string(), "loop(a,b)");
}

TEST(Discovery, FallThroughFlowerStillReplays) {
    const EventLog log({{{"a", "b", "c"}, 1}, {{"b", "c", "a"}, 1}, {{"c", "a", "b"}, 1}});
    const auto tree = discover_tree(log);
    EXPECT_EQ(tree.to_string(), "loop(tau,xor(a,b,c))");
    expect_replays(log, discover(log));
}

TEST(Discovery, MixedLogReplays) {
    const EventLog log({{{"a", "b", "c"}, 1}, {{"c", "b", "a"}, 1}, {{"b"}, 1}, {{"a", "c"}, 1}});
    expect_replays(log, discover(log));
}

TEST(Discovery, EmptyLogRejected) {
    EXPECT_THROW(discover_tree(EventLog{}), InvalidArgument);
}

TEST(Discovery, RandomLogsReplay) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const auto log = gen::random_log(rng, 6, 15, 7);
        const auto net = discover(log);
        EXPECT_NO_THROW(net.validate());
        expect_replays(log, net);
    }
}

TEST(Discovery, DeterministicOutput) {
    std::mt19937_64 rng(1);
    const auto log = gen::random_log(rng, 6, 20, 8);
    EXPECT_EQ(discover(log), discover(log));
}

TEST(TreeToNet, Leaf) {
    const auto net = tree_to_net(leaf("a"));
    EXPECT_EQ(net.places().size(), 2u);
    EXPECT_EQ(net.transitions().size(), 1u);
    EXPECT_EQ(net.arcs().size(), 2u);
}

TEST(TreeToNet, Sequence) {
    const auto net = tree_to_net(ProcessTree::op(K::Sequence, {leaf("a"), leaf("b")}));
    EXPECT_EQ(language_upto(net, 4, 100), (std::set<Trace>{{"a", "b"}}));
}

TEST(TreeToNet, LoopLanguage) {
    const auto net = tree_to_net(ProcessTree::op(K::Loop, {leaf("a"), leaf("b")}));
    const std::set<Trace> expected{{"a"}, {"a", "b", "a"}, {"a", "b", "a", "b", "a"}};
    EXPECT_EQ(language_upto(net, 5, 1000), expected);
}

TEST(TreeToNet, ParallelAndChoice) {
    const auto par = tree_to_net(ProcessTree::op(K::Parallel, {leaf("a"), leaf("b")}));
    EXPECT_EQ(language_upto(par, 4, 100), (std::set<Trace>{{"a", "b"}, {"b", "a"}}));
    const auto alt = tree_to_net(ProcessTree::op(K::Choice, {leaf("a"), ProcessTree::silent()}));
    EXPECT_EQ(language_upto(alt, 4, 100), (std::set<Trace>{{}, {"a"}}));
}

TEST(Miner, Registry) {
    const auto m = make_miner("inductive");
    EXPECT_EQ(m->name(), "inductive");
    EXPECT_THROW(make_miner("split"), InvalidArgument);
}
