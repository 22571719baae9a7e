#include "protosel/eventlog.hpp"

#include <algorithm>

#include "protosel/errors.hpp"

namespace protosel {

std::string to_string(const Trace& trace) {
    std::string out = "<";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i) out += ',';
        out += trace[i];
    }
    out += '>';
    return out;
}

EventLog::EventLog(const std::vector<Variant>& variants) {
    for (const auto& v : variants) add(v.trace, v.count);
}

void EventLog::add(Trace trace, std::size_t count) {
    if (count == 0) return;
    counts_[std::move(trace)] += count;
    total_ += count;
}

std::size_t EventLog::count(const Trace& trace) const {
    auto it = counts_.find(trace);
    return it == counts_.end() ? 0 : it->second;
}

std::set<Activity> EventLog::activities() const {
    std::set<Activity> out;
    for (const auto& [trace, n] : counts_) out.insert(trace.begin(), trace.end());
    return out;
}

std::vector<Variant> EventLog::variants() const {
    std::vector<Variant> out;
    out.reserve(counts_.size());
    for (const auto& [trace, n] : counts_) out.push_back({trace, n});
    // counts_ is already lexicographic, so a stable sort on count keeps the tie order.
    std::stable_sort(out.begin(), out.end(),
                     [](const Variant& a, const Variant& b) { return a.count > b.count; });
    return out;
}

std::uint64_t EventLog::fingerprint() const {
    // FNV-1a over the canonical (sorted) variant map.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& [trace, n] : counts_) {
        for (const auto& a : trace) {
            mix(a.data(), a.size());
            mix("\x1f", 1);
        }
        const std::uint64_t c = n;
        mix(&c, sizeof c);
        mix("\x1e", 1);
    }
    return h;
}

std::vector<Variant> variants(const EventLog& log) { return log.variants(); }

Sublog Sublog::select(const EventLog& parent, const std::vector<Trace>& traces) {
    EventLog log;
    for (const auto& t : traces) {
        const auto n = parent.count(t);
        if (n == 0) throw InvalidArgument("trace " + to_string(t) + " does not occur in the parent log");
        if (!log.contains(t)) log.add(t, n);
    }
    return Sublog(std::move(log), parent.fingerprint());
}

Sublog Sublog::with_counts(const EventLog& parent, const std::vector<Variant>& variants) {
    EventLog log(variants);
    for (const auto& [t, n] : log.counts()) {
        if (parent.count(t) < n)
            throw InvalidArgument("sublog variant " + to_string(t) + " exceeds its parent count");
    }
    return Sublog(std::move(log), parent.fingerprint());
}

bool Sublog::is_sublog_of(const EventLog& parent) const {
    if (parent.fingerprint() != parent_fingerprint_) return false;
    return std::all_of(log_.counts().begin(), log_.counts().end(),
                       [&](const auto& kv) { return parent.count(kv.first) >= kv.second; });
}

}  // namespace protosel
