#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "protosel/errors.hpp"
#include "protosel/tracedist.hpp"

using namespace protosel;

TEST(EditDistance, WorkedExample) {
    EXPECT_EQ(edit_distance({"a", "c", "f", "e", "d"}, {"a", "f", "c", "a", "d"}), 4u);
}

TEST(EditDistance, NoSubstitution) {
    EXPECT_EQ(edit_distance({"a"}, {"b"}), 2u);
    EXPECT_EQ(edit_distance({"a", "b"}, {"b", "a"}), 2u);
    EXPECT_EQ(edit_distance({"a"}, {"a", "b"}), 1u);
    EXPECT_EQ(edit_distance({}, {"a", "b", "c"}), 3u);
}

TEST(EditDistance, IdentityIsZero) {
    const Trace t{"x", "y", "x"};
    EXPECT_EQ(edit_distance(t, t), 0u);
    EXPECT_EQ(edit_distance({}, {}), 0u);
}

TEST(EditDistance, MatchesIndependentDpAndLcsIdentity) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen::random_trace(rng, 4, 12);
        const auto b = gen::random_trace(rng, 4, 12);
        const auto d = edit_distance(a, b);
        ASSERT_EQ(d, oracle::indel_distance(a, b)) << to_string(a) << " " << to_string(b);
        ASSERT_EQ(lcs_length(a, b), oracle::lcs(a, b));
        ASSERT_EQ(d, a.size() + b.size() - 2 * oracle::lcs(a, b));
    }
}

TEST(EditDistance, MetricAxioms) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto a = gen::random_trace(rng, 3, 8);
        const auto b = gen::random_trace(rng, 3, 8);
        const auto c = gen::random_trace(rng, 3, 8);
        EXPECT_EQ(edit_distance(a, b), edit_distance(b, a));
        EXPECT_LE(edit_distance(a, c), edit_distance(a, b) + edit_distance(b, c));
        EXPECT_EQ(edit_distance(a, b) == 0, a == b);
    }
}

TEST(DistanceMatrix, SmallExamples) {
    const auto one = distance_matrix({{"a"}});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one(0, 0), 0u);

    const auto two = distance_matrix({{"a"}, {"a", "b"}});
    EXPECT_EQ(two(0, 1), 1u);
    EXPECT_EQ(two(1, 0), 1u);
    EXPECT_EQ(two(1, 1), 0u);

    const auto swap = distance_matrix({{"a", "b"}, {"b", "a"}});
    EXPECT_EQ(swap(0, 1), 2u);
}

TEST(DistanceMatrix, SymmetricZeroDiagonalTriangle) {
    std::mt19937_64 rng(9);
    const auto log = gen::random_log(rng, 4, 30, 7);
    std::vector<Trace> traces;
    for (const auto& v : log.variants()) traces.push_back(v.trace);
    const DistanceMatrix m(traces);
    for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(m(i, i), 0u);
        for (std::size_t j = 0; j < m.size(); ++j) {
            EXPECT_EQ(m(i, j), m(j, i));
            EXPECT_EQ(m(i, j), edit_distance(traces[i], traces[j]));
            for (std::size_t k = 0; k < m.size(); ++k) EXPECT_LE(m(i, k), m(i, j) + m(j, k));
        }
    }
}

TEST(DistanceMatrix, RestrictKeepsEntries) {
    const DistanceMatrix m({{"a"}, {"a", "b"}, {"c"}, {"a", "b", "c"}});
    const std::vector<std::size_t> idx{3, 0};
    const auto sub = m.restrict_to(idx);
    ASSERT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub.trace(0), (Trace{"a", "b", "c"}));
    EXPECT_EQ(sub(0, 1), m(3, 0));
    EXPECT_EQ(sub(1, 1), 0u);
}

TEST(DistanceMatrix, RejectsEmptyAndDuplicateInput) {
    EXPECT_THROW(DistanceMatrix(std::vector<Trace>{}), InvalidArgument);
    EXPECT_THROW(DistanceMatrix({{"a"}, {"a"}}), InvalidArgument);
}

TEST(DistanceMatrix, CsvDump) {
    std::ostringstream out;
    distance_matrix({{"a"}, {"b"}}).write_csv(out);
    EXPECT_EQ(out.str(), "variant,0,1\n0,0,2\n1,2,0\n");
}
