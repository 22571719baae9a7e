#include "protosel/tracedist.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "protosel/errors.hpp"

namespace protosel {

std::size_t lcs_length(const Trace& a, const Trace& b) {
    const Trace& outer = a.size() >= b.size() ? a : b;
    const Trace& inner = a.size() >= b.size() ? b : a;
    // Two rolling rows over the shorter trace.
    std::vector<std::size_t> prev(inner.size() + 1, 0), cur(inner.size() + 1, 0);
    for (const auto& x : outer) {
        for (std::size_t j = 1; j <= inner.size(); ++j)
            cur[j] = x == inner[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[inner.size()];
}

std::size_t edit_distance(const Trace& a, const Trace& b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

DistanceMatrix::DistanceMatrix(std::vector<Trace> traces) : traces_(std::move(traces)) {
    if (traces_.empty()) throw InvalidArgument("distance matrix needs at least one trace");
    std::set<Trace> seen;
    for (std::size_t i = 0; i < traces_.size(); ++i) {
        if (!seen.insert(traces_[i]).second)
            throw InvalidArgument("duplicate variant " + to_string(traces_[i]) + " at index " +
                                  std::to_string(i));
    }
    const auto n = traces_.size();
    entries_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto d = static_cast<value_type>(edit_distance(traces_[i], traces_[j]));
            entries_[i * n + j] = d;
            entries_[j * n + i] = d;
        }
    }
}

DistanceMatrix DistanceMatrix::restrict_to(std::span<const std::size_t> indices) const {
    DistanceMatrix out;
    const auto m = indices.size();
    out.traces_.reserve(m);
    for (auto i : indices) out.traces_.push_back(traces_.at(i));
    out.entries_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out.entries_[a * m + b] = (*this)(indices[a], indices[b]);
    return out;
}

void DistanceMatrix::write_csv(std::ostream& out) const {
    out << "variant";
    for (std::size_t j = 0; j < size(); ++j) out << ',' << j;
    out << '\n';
    for (std::size_t i = 0; i < size(); ++i) {
        out << i;
        for (std::size_t j = 0; j < size(); ++j) out << ',' << (*this)(i, j);
        out << '\n';
    }
}

DistanceMatrix distance_matrix(std::vector<Trace> traces) { return DistanceMatrix(std::move(traces)); }

}  // namespace protosel
