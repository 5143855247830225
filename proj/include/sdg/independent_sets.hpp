#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "sdg/graph.hpp"
#include "sdg/partition.hpp"
#include "sdg/recognizers.hpp"

namespace sdg {

// Deduplicated, canonically ordered family of maximal independent sets,
// together with the partition the enumeration ran on.
struct MisCollection {
    std::vector<VertexSet> sets;
    SparseDensePartition source_partition;
};

// All independent subsets of the dense side (in g), each of size at most
// t-1, the empty set included, emitted in canonical order. The independence
// bound is checked lazily: a size-(t-1) subset with a remaining extension
// candidate pins an independent set of t vertices.
inline std::vector<VertexSet> enumerate_dense_side_is(const Graph& g, const VertexSet& dense,
                                                      int t) {
    detail::check_set(g, dense);
    if (t < 1) throw std::invalid_argument("independence bound t must be at least 1");
    std::vector<VertexSet> out;
    VertexSet current(g.order());
    auto rec = [&](auto&& self, const VertexSet& candidates) -> void {
        out.push_back(current);
        if (current.size() == t - 1) {
            if (!candidates.empty())
                throw std::invalid_argument("dense side contains an independent set of " +
                                            std::to_string(t) +
                                            " vertices, violating its independence bound");
            return;
        }
        for (int v : candidates) {
            current.insert(v);
            VertexSet rest = candidates - g.neighbors(v);
            rest.erase_below(v + 1);
            self(self, rest);
            current.erase(v);
        }
    };
    rec(rec, dense);
    return out;
}

// All maximal independent sets of the subgraph induced by the sparse side,
// as subsets of g's vertices. An edgeless side has exactly one: itself.
// Bipartite sides are rejected: induced matchings with n edges already have
// 2^n maximal independent sets, so no polynomial enumeration exists.
inline std::vector<VertexSet> sparse_mis_enumerate(const Graph& g, const VertexSet& sparse,
                                                   const ClassId& cls) {
    detail::check_set(g, sparse);
    switch (cls.kind) {
        case GraphClass::edgeless:
            if (!is_independent_set(g, sparse))
                throw std::invalid_argument("sparse side is not edgeless");
            return {sparse};
        case GraphClass::bipartite:
            throw std::invalid_argument(
                "bipartite sparse sides can have exponentially many maximal independent sets");
        default:
            throw std::invalid_argument("unsupported sparse class");
    }
}

// r_d plus every vertex of r_s with no neighbor in r_d. Since r_s is
// independent, this is the unique maximal independent extension of r_d
// inside r_d + r_s.
inline VertexSet maximal_extension(const Graph& g, const VertexSet& r_d, const VertexSet& r_s) {
    if (!is_independent_set(g, r_d))
        throw std::invalid_argument("r_d is not an independent set");
    if (!is_independent_set(g, r_s))
        throw std::invalid_argument("r_s is not an independent set");
    VertexSet out = r_d;
    for (int v : r_s)
        if (!g.neighbors(v).intersects(r_d)) out.insert(v);
    return out;
}

// True iff s is independent and every vertex outside s has a neighbor in s.
inline bool is_maximal_is(const Graph& g, const VertexSet& s) {
    if (!is_independent_set(g, s)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v) && !g.neighbors(v).intersects(s)) return false;
    return true;
}

namespace detail {

inline void sort_and_dedup(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), VertexSet::canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace detail

// Enumerates all maximal independent sets of g, or returns nullopt when g
// admits no partition for the class pair ("not in class" verdict).
//
// One partition (S, D) suffices: every maximal independent set M splits into
// its part inside D plus the vertices of S compatible with that part, so
// pairing each independent subset of D with the sparse side's maximal sets
// and keeping the maximal extensions reaches the whole family. threads > 1
// splits the dense-subset loop; output order is canonical either way.
inline std::optional<MisCollection> enumerate_maximal_is(const Graph& g, const ClassSpec& spec,
                                                         int threads = 1) {
    if (spec.sparse.kind != GraphClass::edgeless)
        throw std::invalid_argument("maximal-set enumeration needs an edgeless sparse class");
    auto partition = find_partition(g, spec);
    if (!partition) return std::nullopt;

    const auto dense_subsets = enumerate_dense_side_is(g, partition->dense_side, spec.t);
    const auto sparse_sets = sparse_mis_enumerate(g, partition->sparse_side, spec.sparse);

    auto process = [&](std::size_t lo, std::size_t hi, std::vector<VertexSet>& sink) {
        for (std::size_t i = lo; i < hi; ++i)
            for (const auto& r_s : sparse_sets) {
                VertexSet extension = maximal_extension(g, dense_subsets[i], r_s);
                if (is_maximal_is(g, extension)) sink.push_back(std::move(extension));
            }
    };

    std::vector<VertexSet> kept;
    const int worker_count = std::max(1, threads);
    if (worker_count == 1 || dense_subsets.size() < 128) {
        process(0, dense_subsets.size(), kept);
    } else {
        std::vector<std::vector<VertexSet>> sinks(static_cast<std::size_t>(worker_count));
        std::vector<std::thread> workers;
        const std::size_t chunk =
            (dense_subsets.size() + worker_count - 1) / static_cast<std::size_t>(worker_count);
        for (int w = 0; w < worker_count; ++w) {
            const std::size_t lo = std::min(dense_subsets.size(), w * chunk);
            const std::size_t hi = std::min(dense_subsets.size(), lo + chunk);
            workers.emplace_back(process, lo, hi, std::ref(sinks[static_cast<std::size_t>(w)]));
        }
        for (auto& worker : workers) worker.join();
        for (auto& sink : sinks)
            for (auto& s : sink) kept.push_back(std::move(s));
    }

    detail::sort_and_dedup(kept);
    return MisCollection{std::move(kept), std::move(*partition)};
}

// Maximum-cardinality matching of a two-colored graph as vertex-disjoint
// (left, right) pairs.
struct MatchingResult {
    std::vector<std::pair<int, int>> matched_pairs;
    int size = 0;
};

namespace detail {

inline void check_coloring(const Graph& g, const TwoColoring& coloring) {
    if (coloring.side.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("coloring size does not match graph order");
    for (const auto& [u, v] : g.edges())
        if (coloring.side[static_cast<std::size_t>(u)] ==
            coloring.side[static_cast<std::size_t>(v)])
            throw std::invalid_argument("coloring is not proper: edge " + std::to_string(u) +
                                        "-" + std::to_string(v) + " stays on one side");
}

}  // namespace detail

// Hopcroft-Karp: repeated BFS layering from unmatched left vertices plus DFS
// augmentation along shortest augmenting paths, until none exists.
inline MatchingResult hopcroft_karp(const Graph& g, const TwoColoring& coloring) {
    detail::check_coloring(g, coloring);
    const int n = g.order();
    constexpr int kInf = 1 << 30;
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), kInf);

    auto is_left = [&](int v) { return coloring.side[static_cast<std::size_t>(v)] == Side::left; };

    auto bfs = [&]() {
        std::deque<int> queue;
        bool reachable_free_right = false;
        for (int u = 0; u < n; ++u) {
            if (!is_left(u)) continue;
            dist[static_cast<std::size_t>(u)] = match[static_cast<std::size_t>(u)] == -1 ? 0 : kInf;
            if (dist[static_cast<std::size_t>(u)] == 0) queue.push_back(u);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                int w = match[static_cast<std::size_t>(v)];
                if (w == -1) {
                    reachable_free_right = true;
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable_free_right;
    };

    auto dfs = [&](auto&& self, int u) -> bool {
        for (int v : g.neighbors(u)) {
            int w = match[static_cast<std::size_t>(v)];
            if (w == -1 || (dist[static_cast<std::size_t>(w)] ==
                                dist[static_cast<std::size_t>(u)] + 1 &&
                            self(self, w))) {
                match[static_cast<std::size_t>(u)] = v;
                match[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < n; ++u)
            if (is_left(u) && match[static_cast<std::size_t>(u)] == -1) dfs(dfs, u);

    MatchingResult result;
    for (int u = 0; u < n; ++u)
        if (is_left(u) && match[static_cast<std::size_t>(u)] != -1)
            result.matched_pairs.emplace_back(u, match[static_cast<std::size_t>(u)]);
    result.size = static_cast<int>(result.matched_pairs.size());
    return result;
}

// Maximum independent set of a two-colored graph via the matching route:
// Z collects vertices on alternating paths from unmatched left vertices; the
// left vertices outside Z together with the right vertices inside Z form a
// minimum vertex cover, and its complement is the answer, of size n minus
// the maximum matching.
inline VertexSet bipartite_max_is(const Graph& g, const TwoColoring& coloring) {
    detail::check_coloring(g, coloring);
    const int n = g.order();
    const auto matching = hopcroft_karp(g, coloring);

    std::vector<int> match(static_cast<std::size_t>(n), -1);
    for (const auto& [u, v] : matching.matched_pairs) {
        match[static_cast<std::size_t>(u)] = v;
        match[static_cast<std::size_t>(v)] = u;
    }

    auto is_left = [&](int v) { return coloring.side[static_cast<std::size_t>(v)] == Side::left; };

    VertexSet in_z(n);
    std::deque<int> queue;
    for (int u = 0; u < n; ++u)
        if (is_left(u) && match[static_cast<std::size_t>(u)] == -1) {
            in_z.insert(u);
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        // left-to-right along non-matching edges, right-to-left along the matching
        for (int v : g.neighbors(u)) {
            if (v == match[static_cast<std::size_t>(u)] || in_z.contains(v)) continue;
            in_z.insert(v);
            int w = match[static_cast<std::size_t>(v)];
            if (w != -1 && !in_z.contains(w)) {
                in_z.insert(w);
                queue.push_back(w);
            }
        }
    }

    VertexSet cover(n);
    for (int v = 0; v < n; ++v) {
        const bool z = in_z.contains(v);
        if ((is_left(v) && !z) || (!is_left(v) && z)) cover.insert(v);
    }
    return cover.complement();
}

struct MaxIsResult {
    VertexSet set;
    VertexSet from_dense;  // the dense-side subset the winner extends
    SparseDensePartition partition;
};

namespace detail {

// Maximum independent set of the sparse-side restriction, as g-vertex ids.
inline VertexSet solve_sparse_restriction(const Graph& g, const VertexSet& restriction,
                                          const ClassId& cls) {
    switch (cls.kind) {
        case GraphClass::edgeless:
            return restriction;
        case GraphClass::bipartite: {
            const auto sub = induced_subgraph(g, restriction);
            const auto coloring = is_bipartite(sub.graph);
            const VertexSet local = bipartite_max_is(sub.graph, *coloring.coloring);
            VertexSet out(g.order());
            for (int v : local) out.insert(sub.id_map[static_cast<std::size_t>(v)]);
            return out;
        }
        default:
            throw std::invalid_argument("unsupported sparse class");
    }
}

}  // namespace detail

// Maximum independent set of g, or nullopt when no partition exists. Each
// independent subset R of the dense side is combined with a maximum
// independent set of the sparse vertices having no neighbor in R; the best
// of these candidates is optimal because the maximum set's dense part is
// among the subsets tried. Ties go to the canonically least candidate.
inline std::optional<MaxIsResult> max_is(const Graph& g, const ClassSpec& spec) {
    if (spec.sparse.kind != GraphClass::edgeless && spec.sparse.kind != GraphClass::bipartite)
        throw std::invalid_argument("unsupported sparse class");
    auto partition = find_partition(g, spec);
    if (!partition) return std::nullopt;

    const auto dense_subsets = enumerate_dense_side_is(g, partition->dense_side, spec.t);

    std::optional<MaxIsResult> best;
    for (const auto& r_d : dense_subsets) {
        VertexSet allowed(g.order());
        for (int v : partition->sparse_side)
            if (!g.neighbors(v).intersects(r_d)) allowed.insert(v);
        VertexSet candidate = r_d | detail::solve_sparse_restriction(g, allowed, spec.sparse);
        if (!best || candidate.size() > best->set.size() ||
            (candidate.size() == best->set.size() &&
             VertexSet::canonical_less(candidate, best->set)))
            best = MaxIsResult{std::move(candidate), r_d, *partition};
    }
    return best;
}

}  // namespace sdg
