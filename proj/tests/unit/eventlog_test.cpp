#include <gtest/gtest.h>

#include "protosel/errors.hpp"
#include "protosel/eventlog.hpp"

using namespace protosel;

TEST(EventLog, CollapsesRepeatedTracesIntoVariants) {
    EventLog log;
    log.add({"a", "b"});
    log.add({"a", "b"});
    log.add({"a", "c"});
    EXPECT_EQ(log.total_traces(), 3u);
    EXPECT_EQ(log.variant_count(), 2u);
    EXPECT_EQ(log.count({"a", "b"}), 2u);
    EXPECT_EQ(log.count({"z"}), 0u);
}

TEST(EventLog, ZeroCountIsIgnored) {
    EventLog log;
    log.add({"a"}, 0);
    EXPECT_TRUE(log.empty());
    EXPECT_EQ(log.variant_count(), 0u);
}

TEST(EventLog, EmptyTraceIsAVariant) {
    EventLog log;
    log.add({});
    EXPECT_EQ(log.variant_count(), 1u);
    EXPECT_TRUE(log.contains({}));
}

TEST(EventLog, VariantsSortedByCountThenLexicographic) {
    EventLog log;
    log.add({"a", "c"});
    log.add({"a", "b"}, 2);
    const std::vector<Variant> expected{{{"a", "b"}, 2}, {{"a", "c"}, 1}};
    EXPECT_EQ(variants(log), expected);

    EventLog tie;
    tie.add({"b"});
    tie.add({"a"});
    const std::vector<Variant> tied{{{"a"}, 1}, {{"b"}, 1}};
    EXPECT_EQ(tie.variants(), tied);

    EXPECT_TRUE(variants(EventLog{}).empty());
}

TEST(EventLog, TotalEqualsSumOfCounts) {
    EventLog log({{{"a"}, 3}, {{"b", "c"}, 4}, {{}, 1}});
    std::size_t sum = 0;
    for (const auto& v : log.variants()) {
        EXPECT_GT(v.count, 0u);
        sum += v.count;
    }
    EXPECT_EQ(sum, log.total_traces());
    EXPECT_EQ(log.activities(), (std::set<Activity>{"a", "b", "c"}));
}

TEST(EventLog, FingerprintIgnoresInsertionOrder) {
    EventLog a, b;
    a.add({"x"});
    a.add({"y", "z"}, 2);
    b.add({"y", "z"});
    b.add({"x"});
    b.add({"y", "z"});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
    b.add({"x"});
    EXPECT_NE(a.fingerprint(), b.fingerprint());
}

TEST(EventLog, ToStringUsesAngleBrackets) {
    EXPECT_EQ(to_string(Trace{"a", "b"}), "<a,b>");
    EXPECT_EQ(to_string(Trace{}), "<>");
}

TEST(Sublog, SelectCarriesParentCounts) {
    EventLog parent({{{"a"}, 5}, {{"b"}, 2}});
    const auto sub = Sublog::select(parent, {{"b"}});
    EXPECT_EQ(sub.log().count({"b"}), 2u);
    EXPECT_EQ(sub.log().total_traces(), 2u);
    EXPECT_TRUE(sub.is_sublog_of(parent));
}

TEST(Sublog, RejectsTracesOutsideParent) {
    EventLog parent({{{"a"}, 1}});
    EXPECT_THROW(Sublog::select(parent, {{"q"}}), InvalidArgument);
    EXPECT_THROW(Sublog::with_counts(parent, {{{"a"}, 2}}), InvalidArgument);
}

TEST(Sublog, NotASublogOfADifferentLog) {
    EventLog parent({{{"a"}, 1}, {{"b"}, 1}});
    EventLog other({{{"a"}, 1}});
    const auto sub = Sublog::select(parent, {{"a"}});
    EXPECT_FALSE(sub.is_sublog_of(other));
}
