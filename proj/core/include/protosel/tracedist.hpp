#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "protosel/eventlog.hpp"

namespace protosel {

/// Length of the longest common subsequence of two traces.
std::size_t lcs_length(const Trace& a, const Trace& b);

/// Minimum number of single-activity insertions and deletions turning `a`
/// into `b` (no substitutions): |a| + |b| - 2 * LCS(a, b).
std::size_t edit_distance(const Trace& a, const Trace& b);

/// Dense symmetric matrix of pairwise edit distances over distinct traces.
class DistanceMatrix {
public:
    using value_type = std::uint32_t;

    DistanceMatrix() = default;

    /// Throws InvalidArgument when `traces` is empty or contains duplicates.
    explicit DistanceMatrix(std::vector<Trace> traces);

    std::size_t size() const noexcept { return traces_.size(); }
    const std::vector<Trace>& traces() const noexcept { return traces_; }
    const Trace& trace(std::size_t i) const { return traces_[i]; }

    value_type operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

    /// Square sub-matrix over `indices` (in that order), no recomputation.
    DistanceMatrix restrict_to(std::span<const std::size_t> indices) const;

    /// Dumps the matrix as CSV; header and first column are variant indices.
    void write_csv(std::ostream& out) const;

private:
    std::vector<Trace> traces_;
    std::vector<value_type> entries_;
};

/// Builds the matrix for an ordered list of distinct traces.
DistanceMatrix distance_matrix(std::vector<Trace> traces);

}  // namespace protosel
