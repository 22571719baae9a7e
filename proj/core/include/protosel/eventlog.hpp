#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace protosel {

/// Activity label. Compared by exact string equality.
using Activity = std::string;

/// Ordered activity sequence of one case. May be empty.
using Trace = std::vector<Activity>;

/// A distinct trace together with its number of occurrences.
struct Variant {
    Trace trace;
    std::size_t count = 0;

    friend bool operator==(const Variant&, const Variant&) = default;
};

std::string to_string(const Trace& trace);

/// Variant-compressed event log: a multiset of traces.
///
/// Immutable once built (all mutation goes through `add`, which only ever
/// increases counts), so a finished log can be shared freely across threads.
class EventLog {
public:
    EventLog() = default;
    explicit EventLog(const std::vector<Variant>& variants);

    /// Adds `count` occurrences of `trace`. A zero count is ignored.
    void add(Trace trace, std::size_t count = 1);

    std::size_t total_traces() const noexcept { return total_; }
    std::size_t variant_count() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return total_ == 0; }

    /// Occurrences of `trace`, 0 when absent.
    std::size_t count(const Trace& trace) const;
    bool contains(const Trace& trace) const { return counts_.contains(trace); }

    /// Sorted activity universe of the log.
    std::set<Activity> activities() const;

    /// Variants by descending count, ties by lexicographic trace order.
    std::vector<Variant> variants() const;

    const std::map<Trace, std::size_t>& counts() const noexcept { return counts_; }

    /// Order-independent content hash; used to tie sublogs to their parent.
    std::uint64_t fingerprint() const;

    friend bool operator==(const EventLog& a, const EventLog& b) { return a.counts_ == b.counts_; }

private:
    std::map<Trace, std::size_t> counts_;
    std::size_t total_ = 0;
};

/// Free-function form of EventLog::variants().
std::vector<Variant> variants(const EventLog& log);

/// A log whose variants all occur in a parent log with at least the same count.
class Sublog {
public:
    /// Builds the sublog of `parent` made of `traces`, each carrying its
    /// count in the parent. Throws InvalidArgument for traces not in `parent`.
    static Sublog select(const EventLog& parent, const std::vector<Trace>& traces);

    /// Builds a sublog with explicit counts, validated against `parent`.
    static Sublog with_counts(const EventLog& parent, const std::vector<Variant>& variants);

    const EventLog& log() const noexcept { return log_; }
    std::uint64_t parent_fingerprint() const noexcept { return parent_fingerprint_; }

    /// True when this sublog was cut from `parent` and still satisfies containment.
    bool is_sublog_of(const EventLog& parent) const;

private:
    Sublog(EventLog log, std::uint64_t parent) : log_(std::move(log)), parent_fingerprint_(parent) {}

    EventLog log_;
    std::uint64_t parent_fingerprint_ = 0;
};

}  // namespace protosel
