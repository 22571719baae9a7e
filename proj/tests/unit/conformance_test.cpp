#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "protosel/conformance.hpp"
#include "protosel/errors.hpp"
#include "protosel/fixtures.hpp"

using namespace protosel;

TEST(Alignment, Fig1Costs) {
    const auto net = fixtures::fig1();
    EXPECT_EQ(alignment_cost({"a", "d", "c", "e"}, net).cost, 0u);
    EXPECT_EQ(alignment_cost({"a", "e"}, net).cost, 2u);
    EXPECT_EQ(alignment_cost({}, net).cost, 4u);
}

TEST(Alignment, MovesAreConsistent) {
    const auto net = fixtures::fig1();
    const Trace trace{"a", "x", "e"};
    const auto r = alignment_cost(trace, net);
    EXPECT_EQ(r.cost, 3u);
    Trace log_side;
    std::size_t cost = 0;
    for (const auto& m : r.moves) {
        if (m.kind == AlignmentMove::Kind::Sync || m.kind == AlignmentMove::Kind::LogOnly) log_side.push_back(*m.label);
        if (m.kind == AlignmentMove::Kind::LogOnly || m.kind == AlignmentMove::Kind::ModelOnly) ++cost;
        if (m.kind == AlignmentMove::Kind::Silent) EXPECT_FALSE(m.label.has_value());
    }
    EXPECT_EQ(log_side, trace);
    EXPECT_EQ(cost, r.cost);
    EXPECT_EQ(r.model_projection().size(), r.closest_model_trace_length);
    EXPECT_TRUE(language_upto(net, 4, 1000).contains(r.model_projection()));
}

TEST(Alignment, MatchesBruteForceOnRandomNets) {
    std::mt19937_64 rng(2718);
    int checked = 0;
    for (int i = 0; checked < 150; ++i) {
        const auto net = i % 2 ? gen::random_dag_net(rng, 4) : tree_to_net(gen::random_small_tree(rng, 4, 7));
        std::size_t shortest = 0;
        try {
            shortest = shortest_visible_path(net);
        } catch (const Error&) {
            continue;
        }
        Aligner aligner(net);
        for (int j = 0; j < 3; ++j) {
            const auto trace = gen::random_trace(rng, 5, 6);
            // An optimal model word is never longer than 2|trace| + shortest.
            const auto words = language_upto(net, 2 * trace.size() + shortest, 100'000);
            EXPECT_EQ(aligner.align(trace).cost, oracle::best_word_cost(trace, words)) << to_string(trace);
        }
        ++checked;
    }
}

TEST(Alignment, BudgetExceededIsReported) {
    ConformanceOptions opts;
    opts.alignment_budget = 3;
    const auto net = fixtures::fig1();
    Aligner aligner(net, opts);
    EXPECT_THROW(aligner.align({"x", "y", "z", "w"}), BudgetExceeded);
}

TEST(Fitness, Fig1Values) {
    const auto net = fixtures::fig1();
    EXPECT_DOUBLE_EQ(trace_fitness({"a", "d", "c", "e"}, net), 1.0);
    EXPECT_DOUBLE_EQ(trace_fitness({"a", "e"}, net), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(trace_fitness({}, net), 0.0);
}

TEST(Fitness, EmptyTraceOnEmptyLanguageWordIsOne) {
    EXPECT_DOUBLE_EQ(trace_fitness({}, fixtures::flower({"a"})), 1.0);
}

TEST(Fitness, LogIsFrequencyWeighted) {
    const auto net = fixtures::fig1();
    EXPECT_DOUBLE_EQ(log_fitness(EventLog({{{"a", "d", "c", "e"}, 1}, {{"a", "e"}, 1}}), net), 5.0 / 6.0);
    EXPECT_DOUBLE_EQ(log_fitness(EventLog({{{"a", "e"}, 3}}), net), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(log_fitness(EventLog({{{"a", "b", "d", "e"}, 2}, {{"a", "d", "b", "e"}, 1}}), net), 1.0);
    EXPECT_THROW(log_fitness(EventLog{}, net), InvalidArgument);
}

TEST(Precision, SequenceVersusFlower) {
    const EventLog log({{{"a", "b"}, 1}});
    EXPECT_DOUBLE_EQ(etc_precision(log, fixtures::sequence({"a", "b"})), 1.0);
    // Two prefix states, each allowing a,b,c with one observed.
    const double flower = etc_precision(log, fixtures::flower({"a", "b", "c"}));
    EXPECT_DOUBLE_EQ(flower, 1.0 / 3.0);
    EXPECT_LT(flower, 1.0);
}

TEST(Precision, Fig1) {
    const auto net = fixtures::fig1();
    const EventLog all({{{"a", "b", "d", "e"}, 1}, {{"a", "d", "c", "e"}, 1}, {{"a", "c", "d", "e"}, 1}, {{"a", "d", "b", "e"}, 1}});
    EXPECT_DOUBLE_EQ(etc_precision(all, net), 1.0);
    // After <a> the model allows b, c, d but only b is seen.
    EXPECT_DOUBLE_EQ(etc_precision(EventLog({{{"a", "b", "d", "e"}, 1}}), net), 2.0 / 3.0);
}

TEST(Precision, WithinUnitInterval) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto log = gen::random_log(rng, 4, 8, 6);
        const auto net = tree_to_net(gen::random_small_tree(rng, 4, 7));
        const auto p = etc_precision(log, net);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
}

TEST(FBeta, Examples) {
    EXPECT_DOUBLE_EQ(f_beta(0.8, 0.8, 1), 0.8);
    EXPECT_DOUBLE_EQ(f_beta(0.8, 0.8, 3.5), 0.8);
    EXPECT_DOUBLE_EQ(f_beta(0.5, 1.0, 1), 2.0 / 3.0);
    EXPECT_NEAR(f_beta(0.65, 0.78, 2), 0.75, 1e-12);
    EXPECT_EQ(f_beta(0, 0.5, 1), 0.0);
    EXPECT_EQ(f_beta(0.5, 0, 1), 0.0);
}

TEST(FBeta, BetaZeroIsPrecisionInfinityIsFitness) {
    EXPECT_DOUBLE_EQ(f_beta(0.3, 0.9, 0), 0.3);
    EXPECT_DOUBLE_EQ(f_beta(0.3, 0.9, std::numeric_limits<double>::infinity()), 0.9);
    EXPECT_NEAR(f_beta(0.3, 0.9, 1e6), 0.9, 1e-9);
}

TEST(FBeta, BoundedByInputs) {
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            for (double beta : {0.25, 0.5, 1.0, 2.0, 8.0}) {
                const double p = i / 10.0, f = j / 10.0;
                const double v = f_beta(p, f, beta);
                EXPECT_GE(v, std::min(p, f) - 1e-12);
                EXPECT_LE(v, std::max(p, f) + 1e-12);
            }
}

TEST(FBeta, RejectsInvalidInput) {
    EXPECT_THROW(f_beta(0.5, 0.5, -1), InvalidArgument);
    EXPECT_THROW(f_beta(1.5, 0.5, 1), InvalidArgument);
    EXPECT_THROW(f_beta(0.5, -0.1, 1), InvalidArgument);
    EXPECT_THROW(f_beta(std::nan(""), 0.5, 1), InvalidArgument);
}

TEST(Deviating, Fig1Split) {
    const EventLog log({{{"a", "d", "c", "e"}, 9}, {{"a", "e"}, 2}});
    const auto dev = deviating_traces(log, fixtures::fig1());
    EXPECT_EQ(dev.log(), EventLog({{{"a", "e"}, 2}}));
    EXPECT_TRUE(dev.is_sublog_of(log));
}

TEST(Deviating, FittingLogsGiveEmptySublog) {
    const EventLog log({{{"a", "b", "d", "e"}, 3}});
    EXPECT_TRUE(deviating_traces(log, fixtures::fig1()).log().empty());
    std::mt19937_64 rng(2);
    const auto random = gen::random_log(rng, 4, 10, 6);
    const auto activities = random.activities();
    std::vector<Activity> alphabet(activities.begin(), activities.end());
    if (alphabet.empty()) alphabet.push_back("a");
    EXPECT_TRUE(deviating_traces(random, fixtures::flower(alphabet)).log().empty());
}

TEST(Deviating, PartitionsTheLog) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const auto log = gen::random_log(rng, 5, 12, 6);
        const auto net = fixtures::fig1();
        const auto aligned = align_log(log, net);
        const auto dev = deviating_traces(log, aligned);
        std::size_t fitting = 0;
        for (const auto& e : aligned.entries)
            if (e.alignment.cost == 0) fitting += e.variant.count;
        EXPECT_EQ(dev.log().total_traces() + fitting, log.total_traces());
    }
}

TEST(Coverage, Basics) {
    const EventLog log({{{"a", "b"}, 3}, {{"a", "c"}, 1}});
    const auto flower = fixtures::flower({"a", "b", "c"});
    const auto all = coverage({{"a", "b"}, {"a", "c"}}, log, flower);
    EXPECT_DOUBLE_EQ(all.log_coverage, 1.0);
    EXPECT_DOUBLE_EQ(all.model_trace_coverage, 1.0);

    const auto partial = coverage({{"a", "c"}}, log, fixtures::sequence({"a", "b"}));
    EXPECT_DOUBLE_EQ(partial.log_coverage, 0.25);
    EXPECT_DOUBLE_EQ(partial.model_trace_coverage, 0.75);

    EXPECT_THROW(coverage({{"z"}}, log, flower), InvalidArgument);
}

TEST(Report, EvaluateAndJson) {
    const EventLog log({{{"a", "b", "d", "e"}, 1}, {{"a", "e"}, 1}});
    const auto r = evaluate(log, fixtures::fig1(), {{"a", "b", "d", "e"}}, 1.0);
    EXPECT_DOUBLE_EQ(r.fitness, (1.0 + 2.0 / 3.0) / 2.0);
    EXPECT_EQ(r.size, 23u);
    EXPECT_EQ(r.cardoso, 2u);
    EXPECT_DOUBLE_EQ(r.log_coverage, 0.5);
    EXPECT_DOUBLE_EQ(r.model_trace_coverage, 0.5);
    EXPECT_DOUBLE_EQ(r.f_beta, f_beta(r.precision, r.fitness, 1.0));
    const auto json = to_json(r);
    for (const char* key : {"fitness", "precision", "f_beta", "beta", "size", "cardoso", "log_coverage", "model_trace_coverage"})
        EXPECT_NE(json.find(std::string("\"") + key + "\""), std::string::npos) << key;
}
