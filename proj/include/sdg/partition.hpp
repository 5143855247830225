#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdg/graph.hpp"
#include "sdg/recognizers.hpp"

namespace sdg {

// Ordered bipartition (S, D) of the vertex set: (S, D) and (D, S) are
// distinct partitions, and both count when both sides qualify.
struct SparseDensePartition {
    VertexSet sparse_side;
    VertexSet dense_side;

    bool operator==(const SparseDensePartition&) const = default;
};

enum class PartitionFailure { none, overlap, cover, sparse_side, dense_side };

struct PartitionCheck {
    bool ok = false;
    PartitionFailure failure = PartitionFailure::none;
    std::string detail;

    explicit operator bool() const { return ok; }
};

// Checks that the two sides partition V(g) and that each side's induced
// subgraph is accepted by its class.
inline PartitionCheck verify_partition(const Graph& g, const ClassSpec& spec,
                                       const SparseDensePartition& p) {
    detail::check_set(g, p.sparse_side);
    detail::check_set(g, p.dense_side);
    if (p.sparse_side.intersects(p.dense_side)) {
        VertexSet both = p.sparse_side & p.dense_side;
        return {false, PartitionFailure::overlap, "sides share vertices " + both.to_string()};
    }
    VertexSet missing = (p.sparse_side | p.dense_side).complement();
    if (!missing.empty())
        return {false, PartitionFailure::cover, "vertices " + missing.to_string() + " unassigned"};
    if (!class_member(spec.sparse, induced_subgraph(g, p.sparse_side).graph))
        return {false, PartitionFailure::sparse_side, "sparse side rejected by its class"};
    if (!class_member(spec.dense, induced_subgraph(g, p.dense_side).graph))
        return {false, PartitionFailure::dense_side, "dense side rejected by its class"};
    return {true, PartitionFailure::none, ""};
}

struct PartitionEnumeration {
    std::vector<SparseDensePartition> partitions;  // canonical order (by sparse side)
    std::vector<std::size_t> prefix_counts;        // working-list size after each vertex
    std::vector<int> bound_warnings;               // prefix lengths i >= 2 whose count exceeded i^(2c)
};

namespace detail {

// Counts above i^(2c) violate the partition-count bound. Compared in long
// double; counts stay far from the bound whenever rounding could matter.
inline bool exceeds_count_bound(std::size_t count, int prefix, int two_c) {
    return static_cast<long double>(count) >
           std::pow(static_cast<long double>(prefix), static_cast<long double>(two_c));
}

}  // namespace detail

// Enumerates every sparse-dense partition of g for the class pair. Vertices
// are folded in id order while the complete partition list of the processed
// prefix is maintained: each new vertex extends every prefix partition to
// either side, keeping extensions whose grown side still belongs to its
// class. Both classes are hereditary, so any partition of g restricts to a
// partition of every prefix and survives each step; the prefix lists stay
// polynomially small because the count bound applies to every prefix graph.
// At prefix length 1 both one-sided partitions may coexist, so the bound is
// surfaced as a warning only from length 2 on.
inline PartitionEnumeration enumerate_partitions(const Graph& g, const ClassSpec& spec) {
    const int n = g.order();
    PartitionEnumeration out;

    std::vector<SparseDensePartition> work{{VertexSet(n), VertexSet(n)}};
    std::vector<SparseDensePartition> next;
    for (int v = 0; v < n; ++v) {
        next.clear();
        next.reserve(2 * work.size());
        for (const auto& p : work) {
            if (incremental_member(spec.sparse, g, p.sparse_side, v)) {
                next.push_back(p);
                next.back().sparse_side.insert(v);
            }
            if (incremental_member(spec.dense, g, p.dense_side, v)) {
                next.push_back(p);
                next.back().dense_side.insert(v);
            }
        }
        work.swap(next);
        out.prefix_counts.push_back(work.size());
        const int prefix = v + 1;
        if (prefix >= 2 && detail::exceeds_count_bound(work.size(), prefix, 2 * spec.c))
            out.bound_warnings.push_back(prefix);
    }

    std::sort(work.begin(), work.end(), [](const SparseDensePartition& a,
                                           const SparseDensePartition& b) {
        return VertexSet::canonical_less(a.sparse_side, b.sparse_side);
    });
    out.partitions = std::move(work);
    return out;
}

// Canonically first sparse-dense partition, or nullopt when none exists;
// absence certifies that g lies outside the class pair.
inline std::optional<SparseDensePartition> find_partition(const Graph& g, const ClassSpec& spec) {
    auto enumeration = enumerate_partitions(g, spec);
    if (enumeration.partitions.empty()) return std::nullopt;
    return enumeration.partitions.front();
}

}  // namespace sdg
